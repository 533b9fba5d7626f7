//! Exact number kernel: arbitrary-precision rationals, quadratic extensions
//! `a + b*sqrt(c)`, and a certified floating-point filter.

mod interval;
mod quadratic;
mod rational;

pub use interval::FloatInterval;
pub use quadratic::QuadraticNumber;
pub use rational::{
    format_rational, frac, parse_rational, rat, rational_sqrt_exact, sqrt_floor_bits, Rational,
};

use std::cmp::Ordering;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KernelError {
    #[error("negative radicand {0} in quadratic number")]
    NegativeRadicand(String),
    #[error("cannot parse rational from {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// Sign of an exact quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    pub fn of(r: &Rational) -> Sign {
        use num_traits::Signed;
        if r.is_positive() {
            Sign::Plus
        } else if r.is_negative() {
            Sign::Minus
        } else {
            Sign::Zero
        }
    }

    pub fn from_ordering(o: Ordering) -> Sign {
        match o {
            Ordering::Less => Sign::Minus,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Plus,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Minus => -1,
            Sign::Zero => 0,
            Sign::Plus => 1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Zero => Sign::Zero,
            Sign::Plus => Sign::Minus,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }
}
