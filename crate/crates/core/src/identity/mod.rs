//! Exact verification of recurrence and convolution identities.
//!
//! The suite covers the linear recurrences for λ(2m) (Lettington's and the
//! α-parametrized families derived from Euler-polynomial generating
//! functions), the convolution identities for ζ, λ and β special values, and
//! the underlying Euler-polynomial identities themselves. Every check is
//! exact: a passing cell has residual identically zero.

pub mod checks;
pub mod report;
pub mod suite;

pub use checks::*;
pub use report::{IdentityReport, Residual, Verdict};
pub use suite::{default_alphas, run_suite, IdentityId, SweepConfig};

/// A parameter combination excluded by an identity's hypothesis.
#[derive(Debug, Clone, thiserror::Error)]
#[error("excluded parameter: {0}")]
pub struct ExcludedParameter(pub String);
