//! Exact rational scalars.
//!
//! All exact arithmetic in this crate runs over [`BigRational`]
//! (arbitrary-precision rationals kept in canonical reduced form:
//! gcd(|numerator|, denominator) = 1 and denominator ≥ 1). This module adds
//! the small set of constructors and helpers the rest of the crate needs.

use num_bigint::BigInt;
pub use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Rational from an integer pair. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational from a big integer.
pub fn rat_big(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

/// Exact integer power with the convention 0^0 = 1.
///
/// Negative exponents invert; inverting zero panics.
pub fn rat_pow(base: &BigRational, exp: i64) -> BigRational {
    if exp == 0 {
        return BigRational::one();
    }
    if exp < 0 {
        assert!(!base.is_zero(), "zero cannot be raised to a negative power");
        return rat_pow(base, -exp).recip();
    }
    // binary powering
    let mut result = BigRational::one();
    let mut b = base.clone();
    let mut e = exp as u64;
    while e > 0 {
        if e & 1 == 1 {
            result *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    result
}

/// Parse a rational from `p/q` or plain integer text.
///
/// Rejects zero denominators and empty input. Whitespace around the
/// string is ignored.
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty rational".to_string());
    }
    match s.split_once('/') {
        None => s
            .parse::<BigInt>()
            .map(BigRational::from_integer)
            .map_err(|e| format!("invalid integer {s:?}: {e}")),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|e| format!("invalid numerator in {s:?}: {e}"))?;
            let q: BigInt = q.trim().parse().map_err(|e| format!("invalid denominator in {s:?}: {e}"))?;
            if q.is_zero() {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(BigRational::new(p, q))
        }
    }
}

/// Canonical `p/q` rendering (`p` alone when the denominator is 1).
pub fn rational_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Absolute value.
pub fn rat_abs(r: &BigRational) -> BigRational {
    r.abs()
}
