//! Exact and high-precision computation for the Dirichlet lambda function
//! λ(s) = Σ 1/(2n+1)^s and its relatives: the alternating form
//! β(s) = Σ (−1)^n/(2n+1)^s, the eta function η(s) = Σ (−1)^{n−1}/n^s, and
//! the alternating Hurwitz zeta J(s,a) = Σ (−1)^n/(n+a)^s.
//!
//! The crate has three layers:
//!
//! * an exact layer ([`exact`], [`closed_forms`]) over arbitrary-precision
//!   rationals: Bernoulli/Euler numbers and polynomials, and closed-form
//!   special values as exact rational multiples of powers of π;
//! * an identity suite ([`identity`]) that verifies every supported
//!   recurrence and convolution identity with exactly-zero residuals;
//! * a numeric engine ([`numeric`]) evaluating λ, β, η, ζ and J(s,a) through
//!   several independent representations (direct series, Mellin-type
//!   integrals, a Hermite-type formula, an incomplete-gamma expansion) with
//!   rigorous error bounds at configurable precision.
//!
//! ```
//! use dirichlet_lambda::closed_forms::lambda_even;
//! use dirichlet_lambda::identity::check_lambda_convolution;
//! use dirichlet_lambda::numeric::{eval_beta_series, Precision};
//!
//! // λ(8) = 17/161280·π^8, exactly
//! assert_eq!(lambda_even(4).to_string(), "17/161280*pi^8");
//!
//! // Σ_{k=1}^m λ(2k)·λ(2m−2k+2) = (m+1/2)·λ(2m+2) with residual exactly zero
//! assert!(check_lambda_convolution(7).passed());
//!
//! // Catalan's constant β(2) to 30 digits with a rigorous absolute bound
//! let g = eval_beta_series(2.0, &Precision::default()).unwrap();
//! assert!(g.error_bound < 1e-25);
//! assert!(g.value.decimal(15).starts_with("0.91596559417721"));
//! ```

pub mod closed_forms;
pub mod exact;
pub mod identity;
pub mod numeric;
pub mod pi_power;
pub mod poly;
pub mod rational;

pub use pi_power::PiPower;
pub use poly::RationalPolynomial;
pub use rational::BigRational;
