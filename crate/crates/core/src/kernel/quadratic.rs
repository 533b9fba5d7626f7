//! Quadratic numbers `a + b*sqrt(c)` with exact sign and order predicates.

use super::rational::{rational_sqrt_exact, Rational};
use super::{FloatInterval, KernelError, Sign};
use num_traits::{Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact real value `a + b*sqrt(c)` with rational `a`, `b` and `c >= 0`.
///
/// The representation is normalized so that a rational value always has
/// `b = 0` and `c = 0`. Two values with different radicands may still be
/// equal (`2*sqrt(2) == sqrt(8)`); equality and ordering compare values,
/// not representations.
#[derive(Clone)]
pub struct QuadraticNumber {
    a: Rational,
    b: Rational,
    c: Rational,
}

impl QuadraticNumber {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self, KernelError> {
        if c.is_negative() {
            return Err(KernelError::NegativeRadicand(c.to_string()));
        }
        Ok(Self::new_normalized(a, b, c))
    }

    pub(crate) fn new_normalized(a: Rational, b: Rational, c: Rational) -> Self {
        debug_assert!(!c.is_negative());
        if b.is_zero() || c.is_zero() {
            Self {
                a,
                b: Rational::zero(),
                c: Rational::zero(),
            }
        } else {
            Self { a, b, c }
        }
    }

    pub fn from_rational(a: Rational) -> Self {
        Self {
            a,
            b: Rational::zero(),
            c: Rational::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    /// `sqrt(c)` for `c >= 0`.
    pub fn sqrt_of(c: Rational) -> Result<Self, KernelError> {
        Self::new(Rational::zero(), Rational::from_integer(1.into()), c)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn radical_coeff(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> &Rational {
        &self.c
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The exact rational value, when the radical part vanishes.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.is_rational() {
            Some(&self.a)
        } else {
            None
        }
    }

    /// Folds a perfect-square radicand into the rational part, when possible.
    pub fn simplified(self) -> Self {
        if self.b.is_zero() {
            return self;
        }
        match rational_sqrt_exact(&self.c) {
            Some(root) => Self::from_rational(self.a + self.b * root),
            None => self,
        }
    }

    fn same_radicand(x: &Self, y: &Self) -> bool {
        x.b.is_zero() || y.b.is_zero() || x.c == y.c
    }

    fn merged_radicand(x: &Self, y: &Self) -> Rational {
        if x.b.is_zero() {
            y.c.clone()
        } else {
            x.c.clone()
        }
    }

    /// Exact sign, decided by at most one comparison of `a^2` with `b^2 c`.
    pub fn sign(&self) -> Sign {
        if self.b.is_zero() {
            return Sign::of(&self.a);
        }
        if self.a.is_zero() {
            return Sign::of(&self.b);
        }
        let sa = Sign::of(&self.a);
        let sb = Sign::of(&self.b);
        if sa == sb {
            return sa;
        }
        let lhs = &self.a * &self.a;
        let rhs = &self.b * &self.b * &self.c;
        match lhs.cmp(&rhs) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Sign::Zero,
        }
    }

    /// Sign via the interval filter, falling back to the exact path only
    /// when the interval straddles zero. Always agrees with [`Self::sign`].
    pub fn sign_filtered(&self) -> Sign {
        self.sign_filtered_detailed().0
    }

    /// Filtered sign plus a flag telling whether the exact fallback ran.
    pub fn sign_filtered_detailed(&self) -> (Sign, bool) {
        match self.interval().sign() {
            Some(s) => (s, false),
            None => (self.sign(), true),
        }
    }

    /// Exact value ordering, valid across different radicands.
    ///
    /// Decides the sign of `(x.a - y.a) + x.b*sqrt(x.c) - y.b*sqrt(y.c)`
    /// by case splits and at most two squarings.
    pub fn cmp_value(&self, other: &Self) -> Ordering {
        let s = sign_two_radical_sum(
            &self.a - &other.a,
            &self.b,
            &self.c,
            &(-other.b.clone()),
            &other.c,
        );
        match s {
            Sign::Minus => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }

    /// Certified enclosure of the value.
    pub fn interval(&self) -> FloatInterval {
        let ia = FloatInterval::from_rational(&self.a);
        if self.b.is_zero() {
            return ia;
        }
        let ib = FloatInterval::from_rational(&self.b);
        let ic = FloatInterval::from_rational(&self.c);
        ia.add(ib.mul(ic.sqrt()))
    }

    /// Nearest-effort float approximation (not certified).
    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        if self.b.is_zero() {
            return a;
        }
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        let c = self.c.to_f64().unwrap_or(f64::NAN);
        a + b * c.sqrt()
    }
}

/// Sign of `A + B*sqrt(c) + C*sqrt(d)` with all arguments rational, `c, d >= 0`.
fn sign_two_radical_sum(a: Rational, b: &Rational, c: &Rational, e: &Rational, d: &Rational) -> Sign {
    let t1_zero = b.is_zero() || c.is_zero();
    let t2_zero = e.is_zero() || d.is_zero();
    // Sign of the radical part B*sqrt(c) + C*sqrt(d).
    let s1 = if t1_zero && t2_zero {
        Sign::Zero
    } else if t1_zero {
        Sign::of(e)
    } else if t2_zero {
        Sign::of(b)
    } else {
        let sb = Sign::of(b);
        let se = Sign::of(e);
        if sb == se {
            sb
        } else {
            let lhs = b * b * c;
            let rhs = e * e * d;
            match lhs.cmp(&rhs) {
                Ordering::Greater => sb,
                Ordering::Less => se,
                Ordering::Equal => Sign::Zero,
            }
        }
    };
    if a.is_zero() {
        return s1;
    }
    let sa = Sign::of(&a);
    if s1 == Sign::Zero || sa == s1 {
        return sa;
    }
    // Opposite signs: compare A^2 with (B*sqrt(c) + C*sqrt(d))^2, itself a
    // quadratic number over the radicand c*d.
    let a2 = &a * &a;
    let rad_sq_rat = b * b * c + e * e * d;
    let cross = Rational::from_integer(2.into()) * b * e;
    let diff = QuadraticNumber::new_normalized(a2 - rad_sq_rat, -cross, c * d);
    match diff.sign() {
        Sign::Plus => sa,
        Sign::Minus => s1,
        Sign::Zero => Sign::Zero,
    }
}

impl PartialEq for QuadraticNumber {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_value(other) == Ordering::Equal
    }
}

impl Eq for QuadraticNumber {}

impl PartialOrd for QuadraticNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_value(other))
    }
}

impl Ord for QuadraticNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_value(other)
    }
}

impl Add for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn add(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        assert!(
            QuadraticNumber::same_radicand(self, rhs),
            "incompatible radicands {} and {}",
            self.c,
            rhs.c
        );
        let c = QuadraticNumber::merged_radicand(self, rhs);
        QuadraticNumber::new_normalized(&self.a + &rhs.a, &self.b + &rhs.b, c)
    }
}

impl Sub for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn sub(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        assert!(
            QuadraticNumber::same_radicand(self, rhs),
            "incompatible radicands {} and {}",
            self.c,
            rhs.c
        );
        let c = QuadraticNumber::merged_radicand(self, rhs);
        QuadraticNumber::new_normalized(&self.a - &rhs.a, &self.b - &rhs.b, c)
    }
}

impl Mul for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn mul(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        assert!(
            QuadraticNumber::same_radicand(self, rhs),
            "incompatible radicands {} and {}",
            self.c,
            rhs.c
        );
        let c = QuadraticNumber::merged_radicand(self, rhs);
        let a = &self.a * &rhs.a + &self.b * &rhs.b * &c;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        QuadraticNumber::new_normalized(a, b, c)
    }
}

impl Neg for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> QuadraticNumber {
        QuadraticNumber::new_normalized(-self.a.clone(), -self.b.clone(), self.c.clone())
    }
}

impl Mul<&Rational> for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn mul(self, rhs: &Rational) -> QuadraticNumber {
        QuadraticNumber::new_normalized(&self.a * rhs, &self.b * rhs, self.c.clone())
    }
}

impl Add<&Rational> for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn add(self, rhs: &Rational) -> QuadraticNumber {
        QuadraticNumber::new_normalized(&self.a + rhs, self.b.clone(), self.c.clone())
    }
}

impl Sub<&Rational> for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn sub(self, rhs: &Rational) -> QuadraticNumber {
        QuadraticNumber::new_normalized(&self.a - rhs, self.b.clone(), self.c.clone())
    }
}

impl fmt::Debug for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}*sqrt({})", self.b, self.c)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.c)
        }
    }
}
