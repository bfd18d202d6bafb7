//! Integral representations, evaluated by tanh-sinh quadrature.
//!
//! Every improper integral here decays exponentially: we split at a cutoff
//! T chosen so a closed-form bound on the [T, ∞) tail is below half the
//! budget, and integrate [0, T] with the double-exponential substitution
//! t = (T/2)·(1 + tanh((π/2)·sinh u)), refining the step until successive
//! levels agree. The substitution absorbs algebraic endpoint singularities
//! t^α (α > −1), so integrands like t^{s−1} near 0 need no special casing;
//! the node window in u is widened according to the worst endpoint exponent.

use crate::numeric::gamma::gamma_r;
use crate::numeric::real::{Ctx, R};
use crate::numeric::{NumericError, NumericResult, NumericValue, Precision};

pub(crate) struct QuadResult<'c> {
    pub value: R<'c>,
    pub bound: f64,
    pub nodes: u64,
}

/// Tanh-sinh quadrature of f over [0, upper].
///
/// `endpoint_alpha` is the most singular endpoint behavior t^α of the
/// integrand (0 for a bounded integrand); it widens the u-window so that
/// weight·integrand still underflows the precision at the window edge.
pub(crate) fn tanh_sinh<'c, F>(
    cx: &'c Ctx,
    upper: &R<'c>,
    tol: f64,
    endpoint_alpha: f64,
    f: F,
) -> Result<QuadResult<'c>, NumericError>
where
    F: Fn(&R<'c>) -> R<'c>,
{
    let digits = (cx.bits() as f64 / std::f64::consts::LOG2_10).floor();
    let decay = (1.0 + endpoint_alpha).min(1.0).max(0.05);
    let sinh_umax = (digits + 8.0) * std::f64::consts::LN_10 / (std::f64::consts::PI * decay);
    let u_max = (sinh_umax + (sinh_umax * sinh_umax + 1.0).sqrt()).ln();
    let half = cx.half();
    let half_pi = &cx.pi() * &half;
    let t_half = upper * &half;

    let mut prev: Option<R<'c>> = None;
    let mut nodes_total: u64 = 0;
    let mut last_diff = f64::MAX;
    for level in 1..=11u32 {
        let h = 0.5f64.powi(level as i32);
        let steps = (u_max / h).ceil() as i64;
        let mut sum = cx.zero();
        let mut sum_abs = cx.zero();
        let mut nodes_level: u64 = 0;
        for j in -steps..=steps {
            let u = cx.from_f64(j as f64 * h);
            let g = &half_pi * &u.sinh();
            let e2g = (&g * &cx.two()).exp();
            // node t = T/(1 + e^{2g}) sweeps (0, T) stably as u runs over ℝ
            let t = upper / &(&cx.one() + &e2g);
            if t.is_zero() || &t >= upper {
                continue;
            }
            // |dt/du| = (T/2)·(π/2)·cosh(u)·sech²(g), sech²(g) = 4e^{2g}/(1+e^{2g})²
            let sech_sq = {
                let denom = &cx.one() + &e2g;
                &(&cx.from_i64(4) * &e2g) / &(&denom * &denom)
            };
            let w = &(&half_pi * &u.cosh()) * &sech_sq;
            let v = &f(&t) * &w;
            sum_abs = &sum_abs + &v.abs();
            sum = &sum + &v;
            nodes_level += 1;
        }
        nodes_total += nodes_level;
        let step = &cx.from_f64(h) * &t_half;
        sum = &sum * &step;
        sum_abs = &sum_abs * &step;
        if let Some(p) = prev.as_ref() {
            last_diff = (&sum - p).abs().to_f64_up();
            if level >= 4 && last_diff <= tol * 0.5 {
                let slack = sum_abs.to_f64_up() * cx.eps() * (nodes_level as f64 + 16.0)
                    + 10f64.powf(-(digits + 2.0));
                return Ok(QuadResult {
                    value: sum,
                    bound: 4.0 * last_diff + slack,
                    nodes: nodes_total,
                });
            }
        }
        prev = Some(sum);
    }
    Err(NumericError::Precision(format!(
        "tanh-sinh refinement stalled at diff {last_diff:e} (tolerance {tol:e})"
    )))
}

/// Solve T for tail_bound(T) = c·T^q·e^{−rT} ≤ target, T ≥ t_min.
fn plan_cutoff(c: f64, q: f64, r: f64, target: f64, t_min: f64) -> f64 {
    let mut t = t_min.max(10.0);
    for _ in 0..40 {
        let need = ((c / target).max(1.0).ln() + q * t.max(1.0).ln()) / r;
        if need <= t {
            break;
        }
        t = need;
    }
    t.max(t_min).max(2.0 * q / r + 4.0)
}

/// λ(s) = (1/Γ(s))·∫_0^∞ t^{s−1}·e^t/(e^{2t}−1) dt, s > 1
/// (the kernel is 1/(2·sinh t)).
pub fn eval_lambda_mellin(s: f64, prec: &Precision) -> NumericResult {
    if !(s > 1.0) {
        return Err(NumericError::Domain(format!(
            "lambda integral requires s > 1, got {s}"
        )));
    }
    let cx = Ctx::new(prec.bits());
    let (gamma, gamma_rel) = gamma_r(&cx, &cx.from_f64(s))?;
    let gamma_f = gamma.to_f64();
    let tol_abs = prec.target_tolerance * gamma_f * 0.125;
    // tail: ∫_T^∞ t^{s−1} e^{−t}/(1−e^{−2T}) dt ≤ 3·T^{s−1}·e^{−T}
    let t_cut = plan_cutoff(3.0, s - 1.0, 1.0, tol_abs, 20.0);
    if t_cut > prec.quadrature_tail_cutoff {
        return Err(NumericError::Precision(format!(
            "required cutoff {t_cut} exceeds cap {}",
            prec.quadrature_tail_cutoff
        )));
    }
    let tail = 3.0 * t_cut.powf(s - 1.0) * (-t_cut).exp();
    let upper = cx.from_f64(t_cut);
    let s1 = cx.from_f64(s - 1.0);
    let q = tanh_sinh(&cx, &upper, tol_abs, s - 2.0, |t| {
        let power = (&t.ln() * &s1).exp();
        &power / &(&cx.two() * &t.sinh())
    })?;
    let value = &q.value / &gamma;
    let bound = (q.bound + tail) / gamma_f * (1.0 + 1e-10)
        + value.abs().to_f64_up() * gamma_rel
        + value.abs().to_f64_up() * 32.0 * cx.eps();
    Ok(NumericValue {
        value: value.into_real(),
        error_bound: bound,
        working_digits: prec.effective_digits(),
        terms_used: q.nodes,
        method: "lambda-mellin",
    })
}

/// Γ(s)·J(s,a) = ∫_0^∞ e^{(1−a)t}·t^{s−1}/(e^t+1) dt, s > 0, 0 < a ≤ 1.
pub fn eval_j_mellin(s: f64, a: f64, prec: &Precision) -> NumericResult {
    if !(s > 0.0) {
        return Err(NumericError::Domain(format!(
            "J integral requires s > 0, got {s}"
        )));
    }
    if !(a > 0.0 && a <= 1.0) {
        return Err(NumericError::Domain(format!(
            "J integral requires 0 < a <= 1, got {a}"
        )));
    }
    let cx = Ctx::new(prec.bits());
    let (gamma, gamma_rel) = gamma_r(&cx, &cx.from_f64(s))?;
    let gamma_f = gamma.to_f64();
    let tol_abs = prec.target_tolerance * gamma_f * 0.125;
    // integrand = t^{s−1}·e^{−at}/(1+e^{−t}); tail ≤ 3·T^{s−1}·e^{−aT}/a-ish
    let t_cut = plan_cutoff(3.0 / a, s - 1.0, a, tol_abs, 20.0 / a.max(0.05));
    if t_cut > prec.quadrature_tail_cutoff {
        return Err(NumericError::Precision(format!(
            "required cutoff {t_cut} exceeds cap {}",
            prec.quadrature_tail_cutoff
        )));
    }
    let tail = 3.0 / a * t_cut.powf(s - 1.0) * (-a * t_cut).exp();
    let upper = cx.from_f64(t_cut);
    let s1 = cx.from_f64(s - 1.0);
    let a_r = cx.from_f64(a);
    let q = tanh_sinh(&cx, &upper, tol_abs, s - 1.0, |t| {
        let power = (&(&t.ln() * &s1) - &(&a_r * t)).exp();
        &power / &(&cx.one() + &(-t).exp())
    })?;
    let value = &q.value / &gamma;
    let bound = (q.bound + tail) / gamma_f * (1.0 + 1e-10)
        + value.abs().to_f64_up() * gamma_rel
        + value.abs().to_f64_up() * 32.0 * cx.eps();
    Ok(NumericValue {
        value: value.into_real(),
        error_bound: bound,
        working_digits: prec.effective_digits(),
        terms_used: q.nodes,
        method: "j-mellin",
    })
}

/// β(s) = (1/(2Γ(s)))·∫_0^∞ t^{s−1}/cosh(t) dt, s > 0.
pub fn eval_beta_sech(s: f64, prec: &Precision) -> NumericResult {
    if !(s > 0.0) {
        return Err(NumericError::Domain(format!(
            "beta integral requires s > 0, got {s}"
        )));
    }
    let cx = Ctx::new(prec.bits());
    let (gamma, gamma_rel) = gamma_r(&cx, &cx.from_f64(s))?;
    let gamma_f = gamma.to_f64();
    let tol_abs = prec.target_tolerance * 2.0 * gamma_f * 0.125;
    // 1/cosh t ≤ 2e^{−t}: tail ≤ 5·T^{s−1}·e^{−T}
    let t_cut = plan_cutoff(5.0, s - 1.0, 1.0, tol_abs, 20.0);
    let tail = 5.0 * t_cut.powf(s - 1.0) * (-t_cut).exp();
    let upper = cx.from_f64(t_cut);
    let s1 = cx.from_f64(s - 1.0);
    let q = tanh_sinh(&cx, &upper, tol_abs, s - 1.0, |t| {
        let power = (&t.ln() * &s1).exp();
        &power / &t.cosh()
    })?;
    let denom = &cx.two() * &gamma;
    let value = &q.value / &denom;
    let bound = (q.bound + tail) / (2.0 * gamma_f) * (1.0 + 1e-10)
        + value.abs().to_f64_up() * gamma_rel
        + value.abs().to_f64_up() * 32.0 * cx.eps();
    Ok(NumericValue {
        value: value.into_real(),
        error_bound: bound,
        working_digits: prec.effective_digits(),
        terms_used: q.nodes,
        method: "beta-sech",
    })
}

/// Hermite-type representation, valid for any real s (the analytic
/// continuation in s):
/// J(s,a) = a^{−s}/2 + 2·∫_0^∞ (a²+y²)^{−s/2}·sin(s·atan(y/a))·e^{πy}/(e^{2πy}−1) dy.
pub fn eval_j_hermite(s: f64, a: f64, prec: &Precision) -> NumericResult {
    if !(a > 0.0 && a <= 1.0) {
        return Err(NumericError::Domain(format!(
            "Hermite representation requires 0 < a <= 1, got {a}"
        )));
    }
    let cx = Ctx::new(prec.bits());
    let tol = prec.target_tolerance;
    // tail of 2∫: |(a²+y²)^{−s/2}| ≤ C·y^q with q = max(0, −s)
    let q_pow = (-s).max(0.0);
    let c0 = if s >= 0.0 {
        a.powf(-s).max(1.0)
    } else {
        2.0f64.powf(q_pow / 2.0)
    };
    let t_cut = plan_cutoff(
        4.0 * c0 / std::f64::consts::PI,
        q_pow,
        std::f64::consts::PI,
        tol / 16.0,
        8.0,
    );
    if t_cut > prec.quadrature_tail_cutoff {
        return Err(NumericError::Precision(format!(
            "required cutoff {t_cut} exceeds cap {}",
            prec.quadrature_tail_cutoff
        )));
    }
    let tail = 4.0 * c0 / std::f64::consts::PI
        * t_cut.powf(q_pow)
        * (-std::f64::consts::PI * t_cut).exp()
        * 1.01;
    let upper = cx.from_f64(t_cut);
    let a_r = cx.from_f64(a);
    let a_sq = &a_r * &a_r;
    let s_r = cx.from_f64(s);
    let half_s = &s_r * &cx.half();
    let pi = cx.pi();
    let q = tanh_sinh(&cx, &upper, tol / 16.0, 0.0, |y| {
        let r_sq = &a_sq + &(y * y);
        let radial = (-&(&r_sq.ln() * &half_s)).exp();
        let angular = (&(y / &a_r).atan() * &s_r).sin();
        let kernel = (&cx.two() * &(&pi * y).sinh()).recip();
        &(&radial * &angular) * &kernel
    })?;
    // a^{−s}/2 + 2·integral
    let a_pow = (-&(&a_r.ln() * &s_r)).exp();
    let value = &(&a_pow * &cx.half()) + &(&cx.two() * &q.value);
    let bound = 2.0 * (q.bound + tail)
        + value.abs().to_f64_up() * 32.0 * cx.eps()
        + a_pow.to_f64_up() * 4.0 * cx.eps();
    Ok(NumericValue {
        value: value.into_real(),
        error_bound: bound,
        working_digits: prec.effective_digits(),
        terms_used: q.nodes,
        method: "j-hermite",
    })
}

/// ∫_0^∞ (π²+t²)^m·sin(2m·atan(t/π))·e^t/(e^{2t}−1) dt, m ≥ 1.
/// Closed form: π^{2m+1}/4.
pub fn sine_kernel_integral(m: u32, prec: &Precision) -> NumericResult {
    if m < 1 {
        return Err(NumericError::Domain("sine kernel integral requires m >= 1".into()));
    }
    let cx = Ctx::new(prec.bits());
    let expected_mag = std::f64::consts::PI.powi(2 * m as i32 + 1) / 4.0;
    let tol_abs = prec.target_tolerance * expected_mag;
    // (π²+t²)^m ≤ (2t²)^m for t ≥ π: tail ≤ 2^{m+1}·T^{2m}·e^{−T}
    let t_cut = plan_cutoff(2f64.powi(m as i32 + 1), 2.0 * m as f64, 1.0, tol_abs / 8.0, 20.0);
    let tail = 2f64.powi(m as i32 + 1) * t_cut.powf(2.0 * m as f64) * (-t_cut).exp();
    let upper = cx.from_f64(t_cut);
    let pi = cx.pi();
    let pi_sq = &pi * &pi;
    let two_m = cx.from_u64(2 * m as u64);
    let q = tanh_sinh(&cx, &upper, tol_abs / 8.0, 0.0, |t| {
        let poly = (&pi_sq + &(t * t)).powi(m as i64);
        let angular = (&(t / &pi).atan() * &two_m).sin();
        let kernel = (&cx.two() * &t.sinh()).recip();
        &(&poly * &angular) * &kernel
    })?;
    let bound = q.bound + tail + q.value.abs().to_f64_up() * 16.0 * cx.eps();
    Ok(NumericValue {
        value: q.value.into_real(),
        error_bound: bound,
        working_digits: prec.effective_digits(),
        terms_used: q.nodes,
        method: "sine-kernel-quadrature",
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms::{beta_odd, eta_even, lambda_even};
    use crate::numeric::pi_power_to_real;
    use crate::numeric::series::{eval_beta_series, eval_j_direct, eval_lambda_series};

    fn prec12() -> Precision {
        Precision::quadrature()
    }

    #[test]
    fn lambda_mellin_matches_closed_forms() {
        let p = prec12();
        for (s, m) in [(2.0, 1u32), (4.0, 2)] {
            let nv = eval_lambda_mellin(s, &p).unwrap();
            let exact = pi_power_to_real(&lambda_even(m), 50);
            let err = nv.value.abs_diff_f64(&exact);
            assert!(err <= nv.error_bound, "s={s}: err {err:e} bound {:e}", nv.error_bound);
            assert!(nv.error_bound <= 1e-11);
        }
        // cross-representation at s = 3
        let nv = eval_lambda_mellin(3.0, &p).unwrap();
        let series = eval_lambda_series(3.0, &Precision::default()).unwrap();
        assert!(nv.agrees_with(&series));
        assert!(matches!(eval_lambda_mellin(1.0, &p), Err(NumericError::Domain(_))));
    }

    #[test]
    fn j_mellin_values() {
        let p = prec12();
        // J(2,1) = η(2) = π²/12
        let nv = eval_j_mellin(2.0, 1.0, &p).unwrap();
        let exact = pi_power_to_real(&eta_even(1), 50);
        assert!(nv.value.abs_diff_f64(&exact) <= nv.error_bound);
        // J(3,1/2) = 2³·β(3) = π³/4
        let nv = eval_j_mellin(3.0, 0.5, &p).unwrap();
        let exact = pi_power_to_real(&beta_odd(1).scale(&crate::rational::rat_int(8)), 50);
        assert!(nv.value.abs_diff_f64(&exact) <= nv.error_bound);
        // J(1,1) = ln 2
        let nv = eval_j_mellin(1.0, 1.0, &p).unwrap();
        let series = eval_j_direct(1.0, 1.0, &Precision::default()).unwrap();
        assert!(nv.agrees_with(&series));
        // endpoint singularity branch (s < 1)
        let nv = eval_j_mellin(0.5, 0.25, &p).unwrap();
        let series = eval_j_direct(0.5, 0.25, &Precision::default()).unwrap();
        assert!(nv.agrees_with(&series), "diff {:e}", nv.value.abs_diff_f64(&series.value));
    }

    #[test]
    fn beta_sech_values() {
        let p = prec12();
        let nv = eval_beta_sech(1.0, &p).unwrap();
        let exact = pi_power_to_real(&beta_odd(0), 50);
        assert!(nv.value.abs_diff_f64(&exact) <= nv.error_bound);
        let nv = eval_beta_sech(3.0, &p).unwrap();
        let exact = pi_power_to_real(&beta_odd(1), 50);
        assert!(nv.value.abs_diff_f64(&exact) <= nv.error_bound);
        // Catalan cross-check against the series route
        let nv = eval_beta_sech(2.0, &p).unwrap();
        let series = eval_beta_series(2.0, &Precision::default()).unwrap();
        assert!(nv.agrees_with(&series));
    }

    #[test]
    fn hermite_values_positive_s() {
        let p = prec12();
        let nv = eval_j_hermite(2.0, 1.0, &p).unwrap();
        let exact = pi_power_to_real(&eta_even(1), 50);
        let err = nv.value.abs_diff_f64(&exact);
        assert!(err <= nv.error_bound, "err {err:e} bound {:e}", nv.error_bound);
    }

    #[test]
    fn hermite_analytic_continuation() {
        let p = Precision {
            target_tolerance: 1e-10,
            ..Precision::quadrature()
        };
        // J(−2m, 1) = 0
        for m in 1..=2u32 {
            let nv = eval_j_hermite(-2.0 * m as f64, 1.0, &p).unwrap();
            assert!(nv.to_f64().abs() <= nv.error_bound.max(1e-9), "m={m}: {}", nv.to_f64());
        }
        // J(−k, 1/3) = E_k(1/3)/2
        let third = crate::rational::rat(1, 3);
        for k in 1..=3u32 {
            let nv = eval_j_hermite(-(k as f64), 1.0 / 3.0, &p).unwrap();
            let exact = crate::closed_forms::j_neg_int(k, &third);
            let exact_f = crate::numeric::real::decimal_of_rational(&exact, 20);
            let got = nv.to_f64();
            let want: f64 = exact_f.parse().unwrap();
            assert!(
                (got - want).abs() <= nv.error_bound.max(1e-8) + 1e-12,
                "k={k}: got {got}, want {want}"
            );
        }
    }

    #[test]
    fn sine_kernel_closed_form() {
        let p = Precision {
            target_tolerance: 1e-9,
            ..Precision::quadrature()
        };
        for m in 1..=2u32 {
            let nv = sine_kernel_integral(m, &p).unwrap();
            let expected = std::f64::consts::PI.powi(2 * m as i32 + 1) / 4.0;
            let rel = (nv.to_f64() - expected).abs() / expected;
            assert!(rel <= 1e-8, "m={m}: rel {rel:e}");
        }
    }
}
