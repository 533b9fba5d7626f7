//! Circles over exact rational coordinates: pairwise relations, intersection
//! points, family validation and the geometric transforms.

mod transform;

pub use transform::{
    inflate_until_incidence, invert_family, reduce_internal_tangencies, Inflation,
    InversionOutcome, Reduction,
};

use crate::kernel::{rat, QuadraticNumber, Rational, Sign};
use num_traits::Zero;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("circle radius must be positive")]
    NonPositiveRadius,
    #[error("identical circles have no intersection locus")]
    IdenticalCircles,
    #[error("inversion scale k must be nonzero")]
    ZeroInversionScale,
    #[error("inversion center lies on circle {index}")]
    CenterOnCircle { index: usize },
    #[error("no incidence reachable: {0}")]
    NoIncidenceReachable(String),
    #[error("intersection point of pair ({}, {}) lies strictly inside disc {i}", pair.0, pair.1)]
    IntersectionInsideDisc { i: usize, pair: (usize, usize) },
    #[error("circle index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("internal invariant broken: {0}")]
    InvariantBroken(String),
}

/// Point with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Self::new(rat(x), rat(y))
    }

    pub fn dist_sq(&self, other: &Point) -> Rational {
        let dx = &self.x - &other.x;
        let dy = &self.y - &other.y;
        &dx * &dx + &dy * &dy
    }

    pub fn to_f64(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        (
            self.x.to_f64().unwrap_or(f64::NAN),
            self.y.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Orientation of the triple `(a, b, c)`: sign of the cross product
/// `(b - a) x (c - a)`. `Plus` means counterclockwise.
pub fn orient2d(a: &Point, b: &Point, c: &Point) -> Sign {
    let cross = (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x);
    Sign::of(&cross)
}

/// Circle with rational center and positive squared radius.
///
/// The squared radius is the canonical datum: every predicate in the crate
/// consumes squared distances and squared radii, so circles whose radius is
/// an irrational square root (pencil circles, inflation results) remain
/// exactly representable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circle {
    center: Point,
    radius_sq: Rational,
}

impl Circle {
    /// Circle from a rational radius.
    pub fn new(center: Point, radius: Rational) -> Result<Self, GeometryError> {
        if Sign::of(&radius) != Sign::Plus {
            return Err(GeometryError::NonPositiveRadius);
        }
        let radius_sq = &radius * &radius;
        Ok(Self { center, radius_sq })
    }

    /// Circle from an exact squared radius.
    pub fn with_radius_sq(center: Point, radius_sq: Rational) -> Result<Self, GeometryError> {
        if Sign::of(&radius_sq) != Sign::Plus {
            return Err(GeometryError::NonPositiveRadius);
        }
        Ok(Self { center, radius_sq })
    }

    pub fn center(&self) -> &Point {
        &self.center
    }

    pub fn radius_sq(&self) -> &Rational {
        &self.radius_sq
    }

    /// Exact rational radius, when the squared radius is a perfect square.
    pub fn rational_radius(&self) -> Option<Rational> {
        crate::kernel::rational_sqrt_exact(&self.radius_sq)
    }

    pub fn radius_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.radius_sq.to_f64().map(f64::sqrt).unwrap_or(f64::NAN)
    }
}

/// How two distinct circles relate, decided by the signs of
/// `d^2 - (r1 + r2)^2` and `d^2 - (r1 - r2)^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairRelation {
    TwoPoints,
    ExternallyTangent,
    InternallyTangent,
    DisjointOutside,
    Contained,
    Identical,
}

impl PairRelation {
    /// True when the circles, as curves, share at least one point.
    pub fn intersects(self) -> bool {
        matches!(
            self,
            PairRelation::TwoPoints
                | PairRelation::ExternallyTangent
                | PairRelation::InternallyTangent
        )
    }

    pub fn is_tangency(self) -> bool {
        matches!(
            self,
            PairRelation::ExternallyTangent | PairRelation::InternallyTangent
        )
    }
}

/// Exact classification of an unordered pair of circles.
///
/// With only squared radii available, `(r1 +/- r2)^2 = R1 + R2 +/- 2*sqrt(R1*R2)`,
/// so each test is the sign of a quadratic number over the radicand `R1*R2`.
pub fn classify_pair(c1: &Circle, c2: &Circle) -> PairRelation {
    if c1.center == c2.center && c1.radius_sq == c2.radius_sq {
        return PairRelation::Identical;
    }
    let d2 = c1.center.dist_sq(&c2.center);
    let r1r2 = &c1.radius_sq * &c2.radius_sq;
    let gap = &d2 - &c1.radius_sq - &c2.radius_sq;
    let outer = QuadraticNumber::new_normalized(gap.clone(), rat(-2), r1r2.clone());
    match outer.sign_filtered() {
        Sign::Plus => PairRelation::DisjointOutside,
        Sign::Zero => PairRelation::ExternallyTangent,
        Sign::Minus => {
            let inner = QuadraticNumber::new_normalized(gap, rat(2), r1r2);
            match inner.sign_filtered() {
                Sign::Plus => PairRelation::TwoPoints,
                Sign::Zero => PairRelation::InternallyTangent,
                Sign::Minus => PairRelation::Contained,
            }
        }
    }
}

/// Which intersection branch a point came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Plus,
    Minus,
}

/// Where an algebraic point came from: the circle pair and branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Provenance {
    pub i: usize,
    pub j: usize,
    pub branch: Branch,
}

/// Point whose coordinates live in a single quadratic extension:
/// `x = ax + bx*sqrt(q)`, `y = ay + by*sqrt(q)` with `q >= 0`.
#[derive(Debug, Clone)]
pub struct AlgebraicPoint {
    ax: Rational,
    bx: Rational,
    ay: Rational,
    by: Rational,
    q: Rational,
    provenance: Option<Provenance>,
}

impl AlgebraicPoint {
    pub fn from_point(p: &Point) -> Self {
        Self {
            ax: p.x.clone(),
            bx: Rational::zero(),
            ay: p.y.clone(),
            by: Rational::zero(),
            q: Rational::zero(),
            provenance: None,
        }
    }

    pub fn x(&self) -> QuadraticNumber {
        QuadraticNumber::new_normalized(self.ax.clone(), self.bx.clone(), self.q.clone())
    }

    pub fn y(&self) -> QuadraticNumber {
        QuadraticNumber::new_normalized(self.ay.clone(), self.by.clone(), self.q.clone())
    }

    pub fn radicand(&self) -> &Rational {
        &self.q
    }

    pub fn provenance(&self) -> Option<Provenance> {
        self.provenance
    }

    pub fn is_rational(&self) -> bool {
        (self.bx.is_zero() && self.by.is_zero()) || self.q.is_zero()
    }

    /// Exact rational coordinates, when both are rational.
    pub fn as_point(&self) -> Option<Point> {
        if self.is_rational() {
            Some(Point::new(self.ax.clone(), self.ay.clone()))
        } else {
            None
        }
    }

    /// Exact squared distance to a rational point; stays in the point's field.
    pub fn dist_sq_to(&self, p: &Point) -> QuadraticNumber {
        let dx_a = &self.ax - &p.x;
        let dy_a = &self.ay - &p.y;
        // (dx_a + bx*sqrt(q))^2 + (dy_a + by*sqrt(q))^2
        let a = &dx_a * &dx_a + &dy_a * &dy_a + (&self.bx * &self.bx + &self.by * &self.by) * &self.q;
        let b = rat(2) * (&dx_a * &self.bx + &dy_a * &self.by);
        QuadraticNumber::new_normalized(a, b, self.q.clone())
    }

    /// Residual of the circle equation `|p - center|^2 - r^2`; exactly zero
    /// iff the point lies on the circle.
    pub fn circle_residual(&self, c: &Circle) -> QuadraticNumber {
        &self.dist_sq_to(&c.center) - &c.radius_sq
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x().to_f64(), self.y().to_f64())
    }

    /// Value equality of coordinates; valid across different radicands.
    pub fn same_location(&self, other: &AlgebraicPoint) -> bool {
        self.x() == other.x() && self.y() == other.y()
    }
}

/// Where a point sits relative to a circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Inside,
    On,
    Outside,
}

/// Exact side-of-circle test via the sign of `|p - center|^2 - r^2`.
pub fn side_of_circle(p: &AlgebraicPoint, c: &Circle) -> Side {
    match p.circle_residual(c).sign_filtered() {
        Sign::Minus => Side::Inside,
        Sign::Zero => Side::On,
        Sign::Plus => Side::Outside,
    }
}

/// Intersection points of two circles: two points sharing one radicand, one
/// rational point for tangent pairs, none when the circles do not meet.
pub fn intersection_points(
    c1: &Circle,
    c2: &Circle,
) -> Result<Vec<AlgebraicPoint>, GeometryError> {
    let relation = classify_pair(c1, c2);
    intersection_points_classified(c1, c2, relation)
}

fn intersection_points_classified(
    c1: &Circle,
    c2: &Circle,
    relation: PairRelation,
) -> Result<Vec<AlgebraicPoint>, GeometryError> {
    match relation {
        PairRelation::Identical => return Err(GeometryError::IdenticalCircles),
        PairRelation::DisjointOutside | PairRelation::Contained => return Ok(vec![]),
        _ => {}
    }
    let dx = &c2.center.x - &c1.center.x;
    let dy = &c2.center.y - &c1.center.y;
    let d2 = &dx * &dx + &dy * &dy;
    // Foot of the radical axis along the center line, then half-chord:
    // m = c1 + e*(c2 - c1),  points = m +/- sqrt(emq)*rot90(c2 - c1).
    let e = (&d2 + &c1.radius_sq - &c2.radius_sq) / (rat(2) * &d2);
    let mx = &c1.center.x + &e * &dx;
    let my = &c1.center.y + &e * &dy;
    let emq = &c1.radius_sq / &d2 - &e * &e;
    match relation {
        PairRelation::ExternallyTangent | PairRelation::InternallyTangent => {
            debug_assert!(emq.is_zero());
            Ok(vec![AlgebraicPoint {
                ax: mx,
                bx: Rational::zero(),
                ay: my,
                by: Rational::zero(),
                q: Rational::zero(),
                provenance: None,
            }])
        }
        PairRelation::TwoPoints => {
            debug_assert_eq!(Sign::of(&emq), Sign::Plus);
            let plus = AlgebraicPoint {
                ax: mx.clone(),
                bx: -dy.clone(),
                ay: my.clone(),
                by: dx.clone(),
                q: emq.clone(),
                provenance: None,
            };
            let minus = AlgebraicPoint {
                ax: mx,
                bx: dy,
                ay: my,
                by: -dx,
                q: emq,
                provenance: None,
            };
            Ok(vec![plus, minus])
        }
        _ => unreachable!(),
    }
}

/// Tangency point of a tangent pair. Coordinates take the form
/// `center1 + sqrt(R1/d^2) * (center2 - center1)`, which is rational whenever
/// both radii are.
pub fn tangency_point(c1: &Circle, c2: &Circle) -> Option<AlgebraicPoint> {
    let relation = classify_pair(c1, c2);
    if !relation.is_tangency() {
        return None;
    }
    Some(
        intersection_points_classified(c1, c2, relation)
            .expect("tangent pair has an intersection point")
            .pop()
            .expect("tangent pair yields one point"),
    )
}

/// A pair of circles that breaks the pairwise-intersecting requirement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub i: usize,
    pub j: usize,
    pub relation: PairRelation,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pair ({}, {}) is {:?}", self.i, self.j, self.relation)
    }
}

/// A validated family: distinct circles, every pair intersecting as curves
/// (`|r_i - r_j| <= d_ij <= r_i + r_j`, tangency allowed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    circles: Vec<Circle>,
}

impl Family {
    /// Validates and wraps a list of circles; on failure returns every
    /// offending pair with its relation.
    pub fn new(circles: Vec<Circle>) -> Result<Self, Vec<Violation>> {
        let violations = pair_violations(&circles);
        if violations.is_empty() {
            Ok(Self { circles })
        } else {
            Err(violations)
        }
    }

    pub fn circles(&self) -> &[Circle] {
        &self.circles
    }

    pub fn len(&self) -> usize {
        self.circles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circles.is_empty()
    }

    pub fn circle(&self, i: usize) -> &Circle {
        &self.circles[i]
    }

    pub fn relation(&self, i: usize, j: usize) -> PairRelation {
        classify_pair(&self.circles[i], &self.circles[j])
    }

    /// Intersection points of the pair `(i, j)` with provenance attached.
    pub fn pair_intersections(&self, i: usize, j: usize) -> Result<Vec<AlgebraicPoint>, GeometryError> {
        let mut pts = intersection_points(&self.circles[i], &self.circles[j])?;
        for (idx, p) in pts.iter_mut().enumerate() {
            p.provenance = Some(Provenance {
                i,
                j,
                branch: if idx == 0 { Branch::Plus } else { Branch::Minus },
            });
        }
        Ok(pts)
    }

    /// Subfamily keeping the circles at `indices`, in the given order.
    pub fn subfamily(&self, indices: &[usize]) -> Result<Self, Vec<Violation>> {
        Family::new(indices.iter().map(|&i| self.circles[i].clone()).collect())
    }

    pub fn centers(&self) -> Vec<Point> {
        self.circles.iter().map(|c| c.center().clone()).collect()
    }
}

/// All pairs violating the pairwise-intersection requirement.
pub fn pair_violations(circles: &[Circle]) -> Vec<Violation> {
    let mut violations = Vec::new();
    for i in 0..circles.len() {
        for j in (i + 1)..circles.len() {
            let relation = classify_pair(&circles[i], &circles[j]);
            if !relation.intersects() {
                violations.push(Violation { i, j, relation });
            }
        }
    }
    violations
}

/// Finds a collinear triple of points, if any, by exhaustive exact
/// orientation tests.
pub fn collinear_triple(points: &[Point]) -> Option<(usize, usize, usize)> {
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            for k in (j + 1)..points.len() {
                if orient2d(&points[i], &points[j], &points[k]) == Sign::Zero {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::frac;

    fn circle(cx: i64, cy: i64, r: i64) -> Circle {
        Circle::new(Point::from_ints(cx, cy), rat(r)).unwrap()
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify_pair(&circle(0, 0, 2), &circle(4, 0, 2)),
            PairRelation::ExternallyTangent
        );
        assert_eq!(
            classify_pair(&circle(0, 0, 2), &circle(3, 0, 2)),
            PairRelation::TwoPoints
        );
        assert_eq!(
            classify_pair(&circle(0, 0, 3), &circle(1, 0, 1)),
            PairRelation::Contained
        );
        assert_eq!(
            classify_pair(&circle(0, 0, 3), &circle(2, 0, 1)),
            PairRelation::InternallyTangent
        );
        assert_eq!(
            classify_pair(&circle(0, 0, 1), &circle(5, 0, 1)),
            PairRelation::DisjointOutside
        );
        assert_eq!(
            classify_pair(&circle(0, 0, 1), &circle(0, 0, 1)),
            PairRelation::Identical
        );
    }

    #[test]
    fn classify_symmetric() {
        let a = circle(0, 0, 2);
        let b = circle(3, 1, 4);
        assert_eq!(classify_pair(&a, &b), classify_pair(&b, &a));
    }

    #[test]
    fn classify_with_irrational_radii() {
        // Pencil circles: radius^2 = a^2 + 1 through (0, 1) and (0, -1).
        let c1 = Circle::with_radius_sq(Point::from_ints(-2, 0), rat(5)).unwrap();
        let c2 = Circle::with_radius_sq(Point::from_ints(2, 0), rat(5)).unwrap();
        assert_eq!(classify_pair(&c1, &c2), PairRelation::TwoPoints);
    }

    #[test]
    fn intersection_symmetric_pair() {
        let c1 = circle(1, 0, 2);
        let c2 = circle(-1, 0, 2);
        let pts = intersection_points(&c1, &c2).unwrap();
        assert_eq!(pts.len(), 2);
        for p in &pts {
            assert_eq!(p.circle_residual(&c1).sign(), Sign::Zero);
            assert_eq!(p.circle_residual(&c2).sign(), Sign::Zero);
            // x = 0, y = +/- sqrt(3)
            assert_eq!(p.x(), QuadraticNumber::zero());
            let y2 = &p.y() * &p.y();
            assert_eq!(y2.as_rational(), Some(&rat(3)));
        }
        assert!(pts[0].y() > pts[1].y());
    }

    #[test]
    fn intersection_offset_pair() {
        let c1 = circle(0, 0, 2);
        let c2 = circle(3, 0, 2);
        let pts = intersection_points(&c1, &c2).unwrap();
        assert_eq!(pts.len(), 2);
        for p in &pts {
            assert_eq!(p.circle_residual(&c1).sign(), Sign::Zero);
            assert_eq!(p.circle_residual(&c2).sign(), Sign::Zero);
            assert_eq!(p.x().as_rational(), Some(&frac(3, 2)));
            // y^2 = 7/4
            let y2 = &p.y() * &p.y();
            assert_eq!(y2.as_rational(), Some(&frac(7, 4)));
        }
    }

    #[test]
    fn intersection_tangent_pair() {
        let c1 = circle(0, 0, 2);
        let c2 = circle(4, 0, 2);
        let pts = intersection_points(&c1, &c2).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].as_point(), Some(Point::from_ints(2, 0)));
    }

    #[test]
    fn intersection_identical_rejected() {
        let c = circle(0, 0, 2);
        assert_eq!(
            intersection_points(&c, &c),
            Err(GeometryError::IdenticalCircles)
        );
    }

    #[test]
    fn side_examples() {
        let origin2 = circle(0, 0, 2);
        let sqrt3 = AlgebraicPoint {
            ax: rat(0),
            bx: rat(0),
            ay: rat(0),
            by: rat(1),
            q: rat(3),
            provenance: None,
        };
        assert_eq!(side_of_circle(&sqrt3, &origin2), Side::Inside);
        let on = AlgebraicPoint::from_point(&Point::from_ints(2, 0));
        assert_eq!(side_of_circle(&on, &origin2), Side::On);
        let c1 = circle(0, 0, 2);
        let c2 = circle(3, 0, 2);
        let p = &intersection_points(&c1, &c2).unwrap()[0];
        assert_eq!(side_of_circle(p, &circle(0, 0, 1)), Side::Outside);
    }

    #[test]
    fn family_validation() {
        assert!(Family::new(vec![circle(0, 0, 2), circle(3, 0, 2)]).is_ok());
        let err = Family::new(vec![circle(0, 0, 3), circle(1, 0, 1)]).unwrap_err();
        assert_eq!(err.len(), 1);
        assert_eq!(err[0].relation, PairRelation::Contained);
        let err = Family::new(vec![circle(0, 0, 2), circle(0, 0, 2)]).unwrap_err();
        assert_eq!(err[0].relation, PairRelation::Identical);
    }

    #[test]
    fn collinear_detection() {
        let pts = vec![
            Point::from_ints(0, 0),
            Point::from_ints(1, 1),
            Point::from_ints(2, 2),
        ];
        assert_eq!(collinear_triple(&pts), Some((0, 1, 2)));
        let pts = vec![
            Point::from_ints(0, 0),
            Point::from_ints(1, 0),
            Point::from_ints(0, 1),
        ];
        assert_eq!(collinear_triple(&pts), None);
    }
}
