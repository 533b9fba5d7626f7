//! Exact census and verification toolkit for arrangements of pairwise
//! intersecting circles.
//!
//! The crate detects lenses (convex digons), lunes and tangencies in such
//! arrangements with exact rational/quadratic arithmetic, builds the
//! red/blue graph on circle centers, checks the structural bounds on digon
//! counts, and searches for bound-tight configurations. A float-mode
//! arrangement builder serves as an independent oracle for the exact census.

pub mod arrangement;
pub mod census;
pub mod generators;
pub mod geometry;
pub mod graphs;
pub mod kernel;

pub use census::{digon_census, CentersGraph, DigonCensus};
pub use geometry::{Circle, Family, Point};
pub use kernel::{QuadraticNumber, Rational, Sign};
