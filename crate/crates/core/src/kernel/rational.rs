//! Parsing, formatting and square-root helpers for exact rationals.

use super::KernelError;
use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// Exact rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact rational `n/d`. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"`, an integer, or an exact decimal such as `"1.25"`.
///
/// The round trip `parse(format(r)) == r` is exact for every rational.
pub fn parse_rational(s: &str) -> Result<Rational, KernelError> {
    let err = |reason: &str| KernelError::Parse {
        input: s.to_string(),
        reason: reason.to_string(),
    };
    let t = s.trim();
    if t.is_empty() {
        return Err(err("empty string"));
    }
    if let Some((num, den)) = t.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| err("invalid numerator"))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| err("invalid denominator"))?;
        if d.is_zero() {
            return Err(err("zero denominator"));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, fract)) = t.split_once('.') {
        if fract.is_empty() || !fract.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err("invalid decimal fraction"));
        }
        let negative = whole.trim_start().starts_with('-');
        let w: BigInt = if whole == "-" || whole == "+" || whole.is_empty() {
            BigInt::zero()
        } else {
            whole.parse().map_err(|_| err("invalid integer part"))?
        };
        let f: BigInt = fract.parse().map_err(|_| err("invalid decimal fraction"))?;
        let scale = BigInt::from(10u32).pow(fract.len() as u32);
        let num = &w * &scale + if negative { -f } else { f };
        return Ok(Rational::new(num, scale));
    }
    let n: BigInt = t.parse().map_err(|_| err("invalid integer"))?;
    Ok(Rational::from_integer(n))
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn rational_sqrt_exact(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer();
    let d = r.denom();
    let sn = n.sqrt();
    if &(&sn * &sn) != n {
        return None;
    }
    let sd = d.sqrt();
    if &(&sd * &sd) != d {
        return None;
    }
    Some(Rational::new(sn, sd))
}

/// Rational enclosure of `sqrt(r)` accurate to `bits` fractional bits:
/// returns `(lo, hi)` with `lo <= sqrt(r) <= hi` and `hi - lo <= 2^-bits`.
///
/// Used by tests as an implementation-independent numeric evaluator.
pub fn sqrt_floor_bits(r: &Rational, bits: u32) -> (Rational, Rational) {
    assert!(!r.is_negative(), "sqrt of negative rational");
    // sqrt(p/q) = sqrt(p*q)/q; floor(sqrt(p*q*4^bits)) / (q*2^bits) is a lower bound.
    let pq = r.numer() * r.denom();
    let scaled = &pq << (2 * bits as usize);
    let root = scaled.sqrt();
    let denom = r.denom() << (bits as usize);
    let lo = Rational::new(root.clone(), denom.clone());
    let hi = Rational::new(root + BigInt::one(), denom);
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("1.25").unwrap(), frac(5, 4));
        assert_eq!(parse_rational("-0.5").unwrap(), frac(-1, 2));
        assert_eq!(parse_rational("7").unwrap(), rat(7));
        assert_eq!(parse_rational("-22/7").unwrap(), frac(-22, 7));
        assert_eq!(parse_rational("6/4").unwrap(), frac(3, 2));
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1.2.3").is_err());
        assert!(parse_rational("1e5").is_err());
    }

    #[test]
    fn format_round_trip() {
        for r in [frac(5, 4), rat(-3), frac(-7, 12), rat(0)] {
            assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }
    }

    #[test]
    fn perfect_squares() {
        assert_eq!(rational_sqrt_exact(&frac(9, 4)), Some(frac(3, 2)));
        assert_eq!(rational_sqrt_exact(&rat(0)), Some(rat(0)));
        assert_eq!(rational_sqrt_exact(&rat(2)), None);
        assert_eq!(rational_sqrt_exact(&rat(-4)), None);
    }

    #[test]
    fn sqrt_enclosure() {
        let (lo, hi) = sqrt_floor_bits(&rat(2), 128);
        assert!(&lo * &lo <= rat(2));
        assert!(&hi * &hi >= rat(2));
        assert!(&hi - &lo <= Rational::new(1.into(), BigInt::from(1) << 128));
    }
}
