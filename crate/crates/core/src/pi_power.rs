//! The closed-form value algebra: exact values of the form c·π^e.
//!
//! Sums are only defined between equal π-exponents (or with a zero operand);
//! a mismatch signals an implementation bug in an identity transcription and
//! panics rather than producing a silently wrong residual.

use crate::rational::{parse_rational, rational_string, BigRational};
use num_traits::Zero;
use std::fmt;
use std::str::FromStr;

/// Exact value c·π^e with rational c and nonnegative integer e.
/// Zero is canonically stored with exponent 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiPower {
    coeff: BigRational,
    exp: u32,
}

impl PiPower {
    pub fn new(coeff: BigRational, exp: u32) -> Self {
        if coeff.is_zero() {
            Self { coeff, exp: 0 }
        } else {
            Self { coeff, exp }
        }
    }

    pub fn zero() -> Self {
        Self::new(BigRational::zero(), 0)
    }

    /// Plain rational (π-exponent 0).
    pub fn from_rational(coeff: BigRational) -> Self {
        Self::new(coeff, 0)
    }

    pub fn coefficient(&self) -> &BigRational {
        &self.coeff
    }

    pub fn exponent(&self) -> u32 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// Addition within a single π-power class.
    ///
    /// Panics when both operands are nonzero with different exponents.
    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        assert_eq!(
            self.exp, other.exp,
            "mixed pi-exponents {} vs {} in PiPower addition (identity transcription bug)",
            self.exp, other.exp
        );
        Self::new(&self.coeff + &other.coeff, self.exp)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self::new(-self.coeff.clone(), self.exp)
    }

    /// Multiplication adds exponents.
    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.coeff * &other.coeff, self.exp + other.exp)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(&self.coeff * c, self.exp)
    }
}

impl fmt::Display for PiPower {
    /// Canonical machine-parsable form `p/q*pi^e` (always carries the
    /// π-exponent so that the representation round-trips unambiguously).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*pi^{}", rational_string(&self.coeff), self.exp)
    }
}

impl FromStr for PiPower {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (c, e) = s
            .split_once("*pi^")
            .ok_or_else(|| format!("missing *pi^ marker in {s:?}"))?;
        let coeff = parse_rational(c)?;
        let exp: u32 = e.trim().parse().map_err(|err| format!("bad exponent in {s:?}: {err}"))?;
        Ok(Self::new(coeff, exp))
    }
}
