//! Certified floating-point intervals used as a filter before exact arithmetic.

use super::rational::Rational;
use super::Sign;
use num_traits::ToPrimitive;

// Outward inflation applied after every rounded operation. Rust offers no
// directed rounding, so each bound moves out by a relative factor of
// 8 machine epsilons plus one ulp.
const INFLATE: f64 = 8.0 * f64::EPSILON;

fn next_down(x: f64) -> f64 {
    if x.is_nan() || x == f64::NEG_INFINITY {
        return x;
    }
    if x == 0.0 {
        return -f64::from_bits(1);
    }
    let bits = x.to_bits();
    f64::from_bits(if x > 0.0 { bits - 1 } else { bits + 1 })
}

fn next_up(x: f64) -> f64 {
    if x.is_nan() || x == f64::INFINITY {
        return x;
    }
    if x == 0.0 {
        return f64::from_bits(1);
    }
    let bits = x.to_bits();
    f64::from_bits(if x > 0.0 { bits + 1 } else { bits - 1 })
}

fn widen_lo(x: f64) -> f64 {
    next_down(x - INFLATE * x.abs())
}

fn widen_hi(x: f64) -> f64 {
    next_up(x + INFLATE * x.abs())
}

/// Closed interval `[lo, hi]` guaranteed to contain the exact value it tracks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FloatInterval {
    lo: f64,
    hi: f64,
}

impl FloatInterval {
    pub fn point(x: f64) -> Self {
        Self { lo: x, hi: x }
    }

    pub fn full() -> Self {
        Self {
            lo: f64::NEG_INFINITY,
            hi: f64::INFINITY,
        }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    /// Enclosure of an exact rational. Exact small integers stay points;
    /// everything else is widened outward.
    pub fn from_rational(r: &Rational) -> Self {
        let n = match r.numer().to_f64() {
            Some(v) if v.is_finite() => v,
            _ => return Self::full(),
        };
        let d = match r.denom().to_f64() {
            Some(v) if v.is_finite() && v != 0.0 => v,
            _ => return Self::full(),
        };
        // Exactly representable ratios (integer numerator, denominator 1,
        // both converted without rounding) need no widening.
        use num_bigint::BigInt;
        use num_traits::One;
        if r.denom().is_one() && BigInt::from(n as i64).to_f64() == Some(n) && n.abs() < 9e15 {
            if BigInt::from(n as i64) == *r.numer() {
                return Self::point(n);
            }
        }
        let q = n / d;
        if !q.is_finite() {
            return Self::full();
        }
        Self {
            lo: widen_lo(widen_lo(q)),
            hi: widen_hi(widen_hi(q)),
        }
    }

    pub fn add(self, rhs: Self) -> Self {
        let lo = self.lo + rhs.lo;
        let hi = self.hi + rhs.hi;
        if !lo.is_finite() || !hi.is_finite() {
            return Self::full();
        }
        Self {
            lo: widen_lo(lo),
            hi: widen_hi(hi),
        }
    }

    pub fn sub(self, rhs: Self) -> Self {
        self.add(Self {
            lo: -rhs.hi,
            hi: -rhs.lo,
        })
    }

    pub fn neg(self) -> Self {
        Self {
            lo: -self.hi,
            hi: -self.lo,
        }
    }

    pub fn mul(self, rhs: Self) -> Self {
        let cands = [
            self.lo * rhs.lo,
            self.lo * rhs.hi,
            self.hi * rhs.lo,
            self.hi * rhs.hi,
        ];
        if cands.iter().any(|c| c.is_nan()) {
            return Self::full();
        }
        let lo = cands.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = cands.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        if !lo.is_finite() || !hi.is_finite() {
            return Self::full();
        }
        Self {
            lo: widen_lo(lo),
            hi: widen_hi(hi),
        }
    }

    /// Square root; the tracked exact value is assumed nonnegative, so a
    /// slightly negative lower bound is clamped to zero.
    pub fn sqrt(self) -> Self {
        let lo = self.lo.max(0.0).sqrt();
        let hi = self.hi.max(0.0).sqrt();
        if !hi.is_finite() {
            return Self {
                lo: widen_lo(lo).max(0.0),
                hi: f64::INFINITY,
            };
        }
        Self {
            lo: widen_lo(lo).max(0.0),
            hi: widen_hi(hi),
        }
    }

    /// Certified sign: `None` when the interval straddles zero.
    pub fn sign(&self) -> Option<Sign> {
        if self.lo > 0.0 {
            Some(Sign::Plus)
        } else if self.hi < 0.0 {
            Some(Sign::Minus)
        } else if self.lo == 0.0 && self.hi == 0.0 {
            Some(Sign::Zero)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::rational::{frac, rat};
    use super::*;
    use num_traits::FromPrimitive;

    fn contains(iv: &FloatInterval, r: &Rational) -> bool {
        match (Rational::from_f64(iv.lo), Rational::from_f64(iv.hi)) {
            (Some(lo), Some(hi)) => &lo <= r && r <= &hi,
            _ => iv.lo == f64::NEG_INFINITY || iv.hi == f64::INFINITY,
        }
    }

    #[test]
    fn rational_enclosure() {
        for r in [frac(1, 3), frac(-7, 11), rat(5), frac(355, 113)] {
            let iv = FloatInterval::from_rational(&r);
            assert!(contains(&iv, &r), "{r} not in [{}, {}]", iv.lo, iv.hi);
        }
    }

    #[test]
    fn arithmetic_containment() {
        let a = frac(1, 3);
        let b = frac(-2, 7);
        let ia = FloatInterval::from_rational(&a);
        let ib = FloatInterval::from_rational(&b);
        assert!(contains(&ia.add(ib), &(&a + &b)));
        assert!(contains(&ia.sub(ib), &(&a - &b)));
        assert!(contains(&ia.mul(ib), &(&a * &b)));
    }

    #[test]
    fn sqrt_containment() {
        let c = rat(2);
        let iv = FloatInterval::from_rational(&c).sqrt();
        // lo^2 <= 2 <= hi^2 checked exactly.
        let lo = Rational::from_f64(iv.lo).unwrap();
        let hi = Rational::from_f64(iv.hi).unwrap();
        assert!(&lo * &lo <= c);
        assert!(&hi * &hi >= c);
    }

    #[test]
    fn sign_decisions() {
        assert_eq!(
            FloatInterval::from_rational(&frac(1, 3)).sign(),
            Some(Sign::Plus)
        );
        assert_eq!(
            FloatInterval::from_rational(&frac(-1, 3)).sign(),
            Some(Sign::Minus)
        );
        assert_eq!(FloatInterval::point(0.0).sign(), Some(Sign::Zero));
        assert_eq!(
            (FloatInterval::point(1.0).sub(FloatInterval::from_rational(&rat(1)))).sign(),
            None
        );
    }
}
