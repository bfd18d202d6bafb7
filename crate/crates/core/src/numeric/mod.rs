//! High-precision numeric evaluation with rigorous error bounds.
//!
//! Every evaluator returns a [`NumericValue`]: an extended-precision value
//! paired with an absolute error bound valid under the documented truncation
//! analysis of that representation. Working precision carries guard digits
//! beyond the requested tolerance so that accumulated rounding stays well
//! below the truncation bounds.

pub mod complex_check;
pub mod gamma;
pub mod incgamma;
pub mod quad;
pub mod real;
pub mod series;

pub use complex_check::check_complex_power_identity;
pub use gamma::{gamma_function, incomplete_gamma_upper};
pub use incgamma::{
    check_j_shift_expansion, eval_beta_incgamma, eval_eta_incgamma, eval_j_incgamma,
};
pub use quad::{
    eval_beta_sech, eval_j_hermite, eval_j_mellin, eval_lambda_mellin, sine_kernel_integral,
};
pub use real::{decimal_of_rational, Real};
pub use series::{
    eval_beta_series, eval_eta_series, eval_j_direct, eval_lambda_series, eval_zeta_via_lambda,
};

use real::bits_for_digits;

/// Precision request for the numeric engine.
#[derive(Clone, Copy, Debug)]
pub struct Precision {
    /// Requested absolute tolerance on the returned value.
    pub target_tolerance: f64,
    /// Decimal digits of working precision (guard digits are added on top
    /// when the tolerance demands more).
    pub working_digits: u32,
    /// Cap on series terms / quadrature nodes.
    pub max_terms: u32,
    /// Cap on the finite integration window [0, T] for tail splitting.
    pub quadrature_tail_cutoff: f64,
}

impl Default for Precision {
    fn default() -> Self {
        Self {
            target_tolerance: 1e-30,
            working_digits: 50,
            max_terms: 500_000,
            quadrature_tail_cutoff: 400.0,
        }
    }
}

impl Precision {
    /// Default profile for quadrature-heavy checks.
    pub fn quadrature() -> Self {
        Self {
            target_tolerance: 1e-12,
            working_digits: 40,
            ..Self::default()
        }
    }

    pub fn with_tolerance(tol: f64) -> Self {
        assert!(tol > 0.0, "tolerance must be positive");
        Self {
            target_tolerance: tol,
            ..Self::default()
        }
    }

    pub fn with_digits(mut self, digits: u32) -> Self {
        self.working_digits = digits;
        self
    }

    /// Working digits after enforcing the guard-digit rule: enough that one
    /// rounding step sits at least ten decimal orders below the tolerance.
    pub fn effective_digits(&self) -> u32 {
        let need = (-self.target_tolerance.log10()).ceil().max(0.0) as u32 + 10;
        self.working_digits.max(need).max(20)
    }

    pub(crate) fn bits(&self) -> usize {
        bits_for_digits(self.effective_digits())
    }
}

/// Extended-precision estimate with a rigorous absolute error bound.
#[derive(Clone, Debug)]
pub struct NumericValue {
    pub value: Real,
    /// Absolute bound on |value − true value|.
    pub error_bound: f64,
    pub working_digits: u32,
    /// Series terms or quadrature nodes consumed.
    pub terms_used: u64,
    /// Which representation produced the value.
    pub method: &'static str,
}

impl NumericValue {
    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }

    /// |self − other| ≤ sum of both error bounds?
    pub fn agrees_with(&self, other: &NumericValue) -> bool {
        self.value.abs_diff_f64(&other.value) <= self.error_bound + other.error_bound
    }

    /// |self − exact| ≤ error bound, for an exact reference value.
    pub fn covers(&self, exact: &Real) -> bool {
        self.value.abs_diff_f64(exact) <= self.error_bound
    }
}

/// Numeric-engine failures.
#[derive(Debug, thiserror::Error)]
pub enum NumericError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("requested precision not attained: {0}")]
    Precision(String),
    #[error("iteration limit exceeded: {0}")]
    IterationLimit(String),
}

pub type NumericResult = Result<NumericValue, NumericError>;

/// Render an exact π-power value at extended precision (test and CLI
/// support for exact-vs-numeric comparisons).
pub fn pi_power_to_real(v: &crate::pi_power::PiPower, digits: u32) -> Real {
    let cx = real::Ctx::new(bits_for_digits(digits));
    let coeff = cx.from_rational(v.coefficient());
    let pi_pow = cx.pi().powi(v.exponent() as i64);
    (&coeff * &pi_pow).into_real()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precision_guard_digits() {
        let p = Precision::with_tolerance(1e-40);
        assert!(p.effective_digits() >= 50);
        let q = Precision::default();
        assert_eq!(q.effective_digits(), 50);
    }

    #[test]
    fn pi_power_rendering() {
        use crate::rational::rat;
        let v = crate::pi_power::PiPower::new(rat(1, 8), 2);
        let r = pi_power_to_real(&v, 40);
        assert!((r.to_f64() - std::f64::consts::PI.powi(2) / 8.0).abs() < 1e-14);
    }
}
