//! Extended-precision real arithmetic.
//!
//! A thin layer over `astro_float::BigFloat`: an evaluation context [`Ctx`]
//! fixes the working precision and owns the constants cache, and [`R`] gives
//! context-tied values with operator syntax. Public results are returned as
//! context-free [`Real`] values that convert exactly to rationals (the
//! binary mantissa is finite), so decimal rendering can be done with exact
//! integer arithmetic and correct rounding.

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};
use crate::rational::BigRational;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Evaluation context: working precision in bits plus the constants cache.
/// Not shareable across threads; every public evaluation builds its own.
pub(crate) struct Ctx {
    bits: usize,
    rm: RoundingMode,
    cc: RefCell<Consts>,
}

impl Ctx {
    pub fn new(bits: usize) -> Self {
        Self {
            bits,
            rm: RoundingMode::ToEven,
            cc: RefCell::new(Consts::new().expect("constants cache")),
        }
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    /// Base-2 relative rounding step of one operation, as f64.
    pub fn eps(&self) -> f64 {
        (2.0f64).powi(-((self.bits as i32) - 1))
    }

    fn wrap(&self, v: BigFloat) -> R<'_> {
        debug_assert!(!v.is_nan(), "NaN produced in extended-precision arithmetic");
        R { v, c: self }
    }

    pub fn from_f64(&self, x: f64) -> R<'_> {
        self.wrap(BigFloat::from_f64(x, self.bits))
    }

    pub fn from_i64(&self, x: i64) -> R<'_> {
        self.wrap(BigFloat::from_i64(x, self.bits))
    }

    pub fn from_u64(&self, x: u64) -> R<'_> {
        self.wrap(BigFloat::from_u64(x, self.bits))
    }

    pub fn from_bigint(&self, x: &BigInt) -> R<'_> {
        let (sign, digits) = x.to_u64_digits();
        let work = self.bits + 64;
        let scale = BigFloat::from_f64((2.0f64).powi(64), work);
        let mut acc = BigFloat::from_i64(0, work);
        for d in digits.iter().rev() {
            acc = acc.mul(&scale, work, self.rm);
            acc = acc.add(&BigFloat::from_u64(*d, work), work, self.rm);
        }
        if sign == num_bigint::Sign::Minus {
            acc = acc.neg();
        }
        self.wrap(acc)
    }

    pub fn from_rational(&self, x: &BigRational) -> R<'_> {
        let n = self.from_bigint(x.numer());
        let d = self.from_bigint(x.denom());
        self.wrap(n.v.div(&d.v, self.bits, self.rm))
    }

    pub fn parse(&self, s: &str) -> R<'_> {
        let v = BigFloat::parse(s, Radix::Dec, self.bits, self.rm, &mut self.cc.borrow_mut());
        self.wrap(v)
    }

    pub fn pi(&self) -> R<'_> {
        let v = self.cc.borrow_mut().pi(self.bits, self.rm);
        self.wrap(v)
    }

    pub fn ln2(&self) -> R<'_> {
        let v = self.cc.borrow_mut().ln_2(self.bits, self.rm);
        self.wrap(v)
    }

    pub fn zero(&self) -> R<'_> {
        self.from_i64(0)
    }

    pub fn one(&self) -> R<'_> {
        self.from_i64(1)
    }

    pub fn two(&self) -> R<'_> {
        self.from_i64(2)
    }

    pub fn half(&self) -> R<'_> {
        self.from_f64(0.5)
    }

    pub fn real(&self, x: &Real) -> R<'_> {
        self.wrap(x.raw.clone())
    }
}

/// Context-tied extended-precision value.
#[derive(Clone)]
pub(crate) struct R<'c> {
    v: BigFloat,
    c: &'c Ctx,
}

macro_rules! unary_cc {
    ($name:ident) => {
        pub fn $name(&self) -> R<'c> {
            let v = self.v.$name(self.c.bits, self.c.rm, &mut self.c.cc.borrow_mut());
            debug_assert!(!v.is_nan(), concat!(stringify!($name), " produced NaN"));
            R { v, c: self.c }
        }
    };
}

impl<'c> R<'c> {
    unary_cc!(exp);
    unary_cc!(ln);
    unary_cc!(sin);
    unary_cc!(cos);
    unary_cc!(atan);
    unary_cc!(sinh);
    unary_cc!(cosh);

    pub fn sqrt(&self) -> R<'c> {
        R {
            v: self.v.sqrt(self.c.bits, self.c.rm),
            c: self.c,
        }
    }

    pub fn abs(&self) -> R<'c> {
        R {
            v: self.v.abs(),
            c: self.c,
        }
    }

    pub fn recip(&self) -> R<'c> {
        R {
            v: self.v.reciprocal(self.c.bits, self.c.rm),
            c: self.c,
        }
    }

    /// Integer power by binary squaring (exponent may be negative).
    pub fn powi(&self, n: i64) -> R<'c> {
        if n < 0 {
            return self.powi(-n).recip();
        }
        R {
            v: self.v.powi(n as usize, self.c.bits, self.c.rm),
            c: self.c,
        }
    }

    /// Real power x^y = exp(y·ln x); requires x > 0 (or x = 0, y > 0).
    #[cfg_attr(not(test), allow(dead_code))]
    pub fn pow(&self, y: &R<'c>) -> R<'c> {
        let v = self
            .v
            .pow(&y.v, self.c.bits, self.c.rm, &mut self.c.cc.borrow_mut());
        debug_assert!(!v.is_nan(), "pow produced NaN");
        R { v, c: self.c }
    }

    /// exp(x) − 1 without cancellation for small |x|.
    pub fn expm1(&self) -> R<'c> {
        let half = self.c.half();
        if self.abs() >= half {
            return &self.exp() - &self.c.one();
        }
        // Σ_{k≥1} x^k/k!, terms shrink at least geometrically for |x| < 1/2
        let mut term = self.clone();
        let mut sum = self.clone();
        let mut k: i64 = 2;
        let cutoff = self.c.from_f64(0.5f64.powi(self.c.bits as i32 + 8));
        let floor = &self.abs() * &cutoff;
        loop {
            term = &(&term * self) / &self.c.from_i64(k);
            sum = &sum + &term;
            if term.abs() <= floor || term.is_zero() {
                return sum;
            }
            k += 1;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    pub fn into_real(self) -> Real {
        Real { raw: self.v }
    }

    #[cfg_attr(not(test), allow(dead_code))]
    pub fn to_real(&self) -> Real {
        Real { raw: self.v.clone() }
    }

    pub fn to_f64(&self) -> f64 {
        Real { raw: self.v.clone() }.to_f64()
    }

    /// f64 conversion rounded away from zero; safe for error bounds.
    pub fn to_f64_up(&self) -> f64 {
        let x = self.to_f64();
        x.abs() * (1.0 + 1e-12) + f64::MIN_POSITIVE
    }
}

impl fmt::Debug for R<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.v)
    }
}

impl PartialEq for R<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.v.cmp(&other.v) == Some(0)
    }
}

impl PartialOrd for R<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.v.cmp(&other.v).map(|s| s.cmp(&0))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $raw:ident) => {
        impl<'c> $trait<&R<'c>> for &R<'c> {
            type Output = R<'c>;
            fn $method(self, rhs: &R<'c>) -> R<'c> {
                let v = self.v.$raw(&rhs.v, self.c.bits, self.c.rm);
                debug_assert!(!v.is_nan(), "NaN in arithmetic");
                R { v, c: self.c }
            }
        }
    };
}

binop!(Add, add, add);
binop!(Sub, sub, sub);
binop!(Mul, mul, mul);
binop!(Div, div, div);

impl<'c> Neg for &R<'c> {
    type Output = R<'c>;
    fn neg(self) -> R<'c> {
        let mut v = self.v.clone();
        v.inv_sign();
        R { v, c: self.c }
    }
}

/// Context-free extended-precision value (finite binary float).
#[derive(Clone, Debug, PartialEq)]
pub struct Real {
    raw: BigFloat,
}

impl Real {
    pub fn from_f64(x: f64) -> Self {
        Real {
            raw: BigFloat::from_f64(x, 64),
        }
    }

    /// Parse a decimal literal at the given precision.
    pub fn parse_decimal(s: &str, digits: u32) -> Self {
        Ctx::new(bits_for_digits(digits)).parse(s).into_real()
    }

    /// Round a rational to the given decimal precision.
    pub fn from_rational(r: &BigRational, digits: u32) -> Self {
        Ctx::new(bits_for_digits(digits)).from_rational(r).into_real()
    }

    /// Exact value as a rational (every finite binary float is rational).
    pub fn to_rational(&self) -> BigRational {
        if self.raw.is_zero() {
            return BigRational::zero();
        }
        let (words, len, sign, exp, _) = self
            .raw
            .as_raw_parts()
            .expect("finite value required for exact conversion");
        let mut bytes = Vec::with_capacity(words.len() * 8);
        for w in words {
            bytes.extend_from_slice(&w.to_le_bytes());
        }
        let mantissa = BigInt::from(BigUint::from_bytes_le(&bytes));
        let mantissa = if sign == Sign::Neg { -mantissa } else { mantissa };
        let shift = exp as i64 - len as i64;
        if shift >= 0 {
            BigRational::from_integer(mantissa << shift as u64)
        } else {
            BigRational::new(mantissa, BigInt::one() << ((-shift) as u64))
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.raw.is_zero() {
            return 0.0;
        }
        let (words, _len, sign, exp, _) = match self.raw.as_raw_parts() {
            Some(p) => p,
            None => {
                return if self.raw.is_inf_pos() {
                    f64::INFINITY
                } else if self.raw.is_inf_neg() {
                    f64::NEG_INFINITY
                } else {
                    f64::NAN
                }
            }
        };
        // top ~128 mantissa bits are plenty for a f64
        let mut mant = 0.0f64;
        let mut scale = 0.5f64 / (u64::MAX as f64 + 1.0) * 2.0; // 2^-64
        for w in words.iter().rev().take(2) {
            mant += (*w as f64) * scale;
            scale /= (u64::MAX as f64) + 1.0;
        }
        let mag = mant * (2.0f64).powi(exp.clamp(-2000, 2000));
        if sign == Sign::Neg {
            -mag
        } else {
            mag
        }
    }

    pub fn is_zero(&self) -> bool {
        self.raw.is_zero()
    }

    /// Decimal rendering with `digits` significant digits, correctly rounded
    /// (round half to even), via exact rational arithmetic.
    pub fn decimal(&self, digits: usize) -> String {
        decimal_of_rational(&self.to_rational(), digits)
    }

    pub fn abs_diff(&self, other: &Real) -> Real {
        Real {
            raw: self.raw.sub_full_prec(&other.raw).abs(),
        }
    }

    /// |self − other| as f64, rounded up.
    pub fn abs_diff_f64(&self, other: &Real) -> f64 {
        let d = self.abs_diff(other);
        d.to_f64().abs() * (1.0 + 1e-12) + f64::MIN_POSITIVE
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.decimal(30))
    }
}

/// Render a rational in decimal with `digits` significant digits, correctly
/// rounded half-to-even. Uses fixed notation for moderate magnitudes and
/// exponent notation otherwise.
pub fn decimal_of_rational(r: &BigRational, digits: usize) -> String {
    let digits = digits.max(1);
    if r.is_zero() {
        return "0".to_string();
    }
    let neg = r.is_negative();
    let a = r.abs();
    let (num, den) = (a.numer().clone(), a.denom().clone());
    // decimal exponent d: largest d with 10^d <= a
    let mut d: i64 = (num.bits() as i64 - den.bits() as i64) * 30103 / 100000;
    let ten = BigInt::from(10);
    let pow10 = |k: i64| -> BigRational {
        if k >= 0 {
            BigRational::from_integer(ten.pow(k as u32))
        } else {
            BigRational::new(BigInt::one(), ten.pow((-k) as u32))
        }
    };
    while pow10(d) > a {
        d -= 1;
    }
    while pow10(d + 1) <= a {
        d += 1;
    }
    // mantissa = round(a·10^{digits−1−d}) with half-even
    let k = digits as i64 - 1 - d;
    let scaled = &a * pow10(k);
    let (mut q, rem) = (scaled.numer() / scaled.denom(), scaled.numer() % scaled.denom());
    let twice = BigInt::from(2) * &rem;
    let den_s = scaled.denom().clone();
    match twice.cmp(&den_s) {
        Ordering::Greater => q += 1,
        Ordering::Equal => {
            if &q % 2 != BigInt::zero() {
                q += 1;
            }
        }
        Ordering::Less => {}
    }
    let mut mant = q.to_string();
    if mant.len() > digits {
        // rounding carried into a new leading digit (e.g. 9.99 -> 10.0)
        d += 1;
        mant.truncate(digits);
    }
    debug_assert_eq!(mant.len(), digits);
    let sign = if neg { "-" } else { "" };
    if d >= digits as i64 + 5 || d < -5 {
        let frac = &mant[1..];
        if frac.is_empty() {
            format!("{sign}{}e{d}", &mant[..1])
        } else {
            format!("{sign}{}.{frac}e{d}", &mant[..1])
        }
    } else if d >= digits as i64 - 1 {
        // integer with trailing zeros
        let zeros = "0".repeat((d - digits as i64 + 1) as usize);
        format!("{sign}{mant}{zeros}")
    } else if d >= 0 {
        format!("{sign}{}.{}", &mant[..=(d as usize)], &mant[(d as usize + 1)..])
    } else {
        let zeros = "0".repeat((-d - 1) as usize);
        format!("{sign}0.{zeros}{mant}")
    }
}

/// Bits of working precision for a decimal digit count, with guard bits.
pub(crate) fn bits_for_digits(digits: u32) -> usize {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + 32
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    #[test]
    fn rational_roundtrip_exact() {
        let cx = Ctx::new(192);
        let x = cx.from_rational(&rat(1, 8));
        assert_eq!(x.to_real().to_rational(), rat(1, 8));
        let y = cx.from_i64(-12345);
        assert_eq!(y.to_real().to_rational(), rat_int(-12345));
        // big integer conversion
        let big: BigInt = "123456789012345678901234567890123".parse().unwrap();
        let z = cx.from_bigint(&big);
        assert_eq!(z.to_real().to_rational(), BigRational::from_integer(big));
    }

    #[test]
    fn arithmetic_and_transcendentals() {
        let cx = Ctx::new(256);
        let pi = cx.pi();
        let sin_pi = pi.sin();
        assert!(sin_pi.to_f64().abs() < 1e-70);
        let e = cx.one().exp();
        let ln_e = e.ln();
        assert!((&ln_e - &cx.one()).to_f64().abs() < 1e-70);
        // 2^10 via pow
        let p = cx.two().pow(&cx.from_i64(10));
        assert_eq!(p.to_real().to_rational(), rat_int(1024));
        assert_eq!(cx.from_i64(3).powi(4).to_real().to_rational(), rat_int(81));
        assert_eq!(cx.from_i64(2).powi(-2).to_real().to_rational(), rat(1, 4));
    }

    #[test]
    fn expm1_small_arguments() {
        let cx = Ctx::new(256);
        let x = cx.parse("1.0e-50");
        let y = x.expm1();
        // exp(x) − 1 = x + x²/2 + …; relative error must stay near full precision
        let rel = (&(&y - &x) / &x).to_f64();
        assert!((rel - 0.5e-50).abs() < 1e-60, "rel={rel:e}");
        let big = cx.from_f64(2.0).expm1();
        assert!((big.to_f64() - (2f64.exp() - 1.0)).abs() < 1e-16 * 10.0);
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal_of_rational(&rat(1, 8), 3), "0.125");
        assert_eq!(decimal_of_rational(&rat(1, 3), 5), "0.33333");
        assert_eq!(decimal_of_rational(&rat(2, 3), 4), "0.6667");
        assert_eq!(decimal_of_rational(&rat(-1234567, 100), 6), "-12345.7");
        assert_eq!(decimal_of_rational(&rat_int(0), 5), "0");
        assert_eq!(decimal_of_rational(&rat_int(1024), 2), "1000");
        // half-to-even at the boundary
        assert_eq!(decimal_of_rational(&rat(25, 1000), 1), "0.02");
        assert_eq!(decimal_of_rational(&rat(35, 1000), 1), "0.04");
        // carry into a new digit
        assert_eq!(decimal_of_rational(&rat(999, 1000), 2), "1.0");
        // exponent notation for extreme magnitudes
        assert_eq!(decimal_of_rational(&rat(1, 1_000_000_000), 3), "1.00e-9");
        let huge = rat_int(7) * crate::rational::rat_pow(&rat_int(10), 25);
        assert_eq!(decimal_of_rational(&huge, 2), "7.0e25");
    }

    #[test]
    fn f64_conversion() {
        let cx = Ctx::new(192);
        assert_eq!(cx.from_f64(0.375).to_f64(), 0.375);
        let tiny = cx.parse("1.0e-300");
        assert!((tiny.to_f64() - 1e-300).abs() < 1e-310);
        let x = cx.pi();
        assert!((x.to_f64() - std::f64::consts::PI).abs() < 1e-15);
    }
}
