//! Numeric consistency check of the complex binomial/sine identity
//! (1+ix)^a − (1−ix)^a = 2i·(1+x²)^{a/2}·sin(a·arctan x).
//!
//! The left side is computed through complex exp/ln in rectangular form, the
//! right side through real powers and trigonometry; the residual is the
//! complex modulus of the difference and should sit at rounding level.

use crate::numeric::real::{Ctx, R};
use crate::numeric::{NumericValue, Precision};

struct C<'c> {
    re: R<'c>,
    im: R<'c>,
}

impl<'c> C<'c> {
    fn sub(&self, other: &C<'c>) -> C<'c> {
        C {
            re: &self.re - &other.re,
            im: &self.im - &other.im,
        }
    }

    fn scale(&self, f: &R<'c>) -> C<'c> {
        C {
            re: &self.re * f,
            im: &self.im * f,
        }
    }

    fn modulus(&self) -> R<'c> {
        (&(&self.re * &self.re) + &(&self.im * &self.im)).sqrt()
    }

    /// exp(z) in rectangular form.
    fn exp(&self) -> C<'c> {
        let r = self.re.exp();
        C {
            re: &r * &self.im.cos(),
            im: &r * &self.im.sin(),
        }
    }
}

/// Residual |(1+ix)^a − (1−ix)^a − 2i·(1+x²)^{a/2}·sin(a·arctan x)|.
pub fn check_complex_power_identity(a: f64, x: f64, prec: &Precision) -> NumericValue {
    let cx = Ctx::new(prec.bits());
    let a_r = cx.from_f64(a);
    let x_r = cx.from_f64(x);
    let one_plus_x2 = &cx.one() + &(&x_r * &x_r);
    // ln(1 ± ix) = (1/2)·ln(1+x²) ± i·arctan x
    let log_re = &one_plus_x2.ln() * &cx.half();
    let theta = x_r.atan();
    let lhs_pos = C {
        re: &a_r * &log_re,
        im: &a_r * &theta,
    }
    .exp();
    let lhs_neg = C {
        re: &a_r * &log_re,
        im: -&(&a_r * &theta),
    }
    .exp();
    let lhs = lhs_pos.sub(&lhs_neg);
    // 2i·(1+x²)^{a/2}·sin(a·arctan x)
    let radial = (&(&a_r * &cx.half()) * &one_plus_x2.ln()).exp();
    let rhs = C {
        re: cx.zero(),
        im: cx.two(),
    }
    .scale(&(&radial * &(&a_r * &theta).sin()));
    let residual = lhs.sub(&rhs).modulus();
    let magnitude = radial.to_f64_up().max(1.0);
    NumericValue {
        value: residual.into_real(),
        error_bound: magnitude * 64.0 * cx.eps(),
        working_digits: prec.effective_digits(),
        terms_used: 0,
        method: "complex-power-residual",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residual_is_rounding_level() {
        let prec = Precision::default();
        for (a, x) in [(2.0, 1.0), (2.7, 0.3), (-1.3, 2.0), (6.0, 0.9)] {
            let nv = check_complex_power_identity(a, x, &prec);
            assert!(
                nv.to_f64() <= nv.error_bound.max(1e-40),
                "a={a} x={x}: residual {:e}",
                nv.to_f64()
            );
        }
    }

    #[test]
    fn degenerate_a_zero() {
        let prec = Precision::default();
        let nv = check_complex_power_identity(0.0, 5.0, &prec);
        assert!(nv.to_f64() == 0.0 || nv.to_f64() < 1e-60);
    }

    #[test]
    fn hand_value_a2_x1() {
        // (1+i)² − (1−i)² = 4i and 2i·2·sin(π/2) = 4i
        let prec = Precision::default();
        let cx = Ctx::new(prec.bits());
        let a = cx.from_f64(2.0);
        let theta = cx.one().atan();
        let radial = (&a * &theta).sin();
        assert!((radial.to_f64() - 1.0).abs() < 1e-30);
        let nv = check_complex_power_identity(2.0, 1.0, &prec);
        assert!(nv.to_f64() < 1e-40);
    }
}
