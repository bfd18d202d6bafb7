//! Series representations: direct summation with Euler–Maclaurin tail
//! completion for λ(s), and alternating summation (plain or
//! Chebyshev-accelerated) for η, β and J(s,a).
//!
//! Error-bound conventions:
//!
//! * plain alternating sums of strictly decreasing terms are bounded by the
//!   first omitted term;
//! * the Chebyshev acceleration of an alternating series with totally
//!   monotone terms a_k (every a_k = ∫ x^k dμ over [0,1] with μ ≥ 0; true
//!   for a_k = (k+c)^{−s}, s > 0, c > 0) has remainder ≤ 2·a₀·(3+√8)^{−n}
//!   after n terms — we return four times that, plus rounding slack;
//! * the Euler–Maclaurin remainder after the B_{2K} correction is bounded by
//!   (2ζ(2K)/(2π)^{2K})·|f^{(2K−1)}(N)|, since the derivatives of
//!   f(u) = (2u+1)^{−s} are completely monotone.

use crate::exact::bernoulli_number;
use crate::numeric::real::{Ctx, R};
use crate::numeric::{NumericError, NumericResult, NumericValue, Precision};

fn rounding_slack(value: &R<'_>, eps: f64, ops: u64) -> f64 {
    value.to_f64_up().abs() * eps * (ops as f64 + 16.0)
}

/// Chebyshev-accelerated alternating sum Σ_{k≥0} (−1)^k a_k over n terms.
/// Valid (with the stated bound) for totally monotone a_k.
fn cvz_sum<'c>(cx: &'c Ctx, n: u32, mut a: impl FnMut(u64) -> R<'c>) -> R<'c> {
    let q = &cx.from_i64(3) + &cx.from_i64(8).sqrt();
    let qn = q.powi(n as i64);
    let d = &(&qn + &qn.recip()) * &cx.half();
    let mut b = -&cx.one();
    let mut c = -&d;
    let mut s = cx.zero();
    let n = n as i64;
    for k in 0..n {
        c = &b - &c;
        s = &s + &(&c * &a(k as u64));
        let num = cx.from_i64((k + n) * (k - n));
        let den = &(&cx.from_i64(2 * k + 1) * &cx.half()) * &cx.from_i64(k + 1);
        b = &(&b * &num) / &den;
    }
    &s / &d
}

/// Number of accelerated terms needed for tolerance `tol` given a₀.
fn cvz_terms(a0: f64, tol: f64) -> u32 {
    let ratio = (32.0 * a0.max(1e-300) / tol).max(4.0);
    (ratio.ln() / (3.0 + 8.0f64.sqrt()).ln()).ceil() as u32 + 3
}

/// Alternating sum Σ_{k≥0} (−1)^k·(k + offset)^{−s} with offset > 0, s > 0.
/// Terms are strictly decreasing and totally monotone, so both the plain
/// first-omitted-term bound and the accelerated bound are rigorous.
fn alternating_power_sum<'c>(
    cx: &'c Ctx,
    s: f64,
    offset: f64,
    stride: f64,
    prec: &Precision,
) -> Result<(R<'c>, f64, u64, &'static str), NumericError> {
    let tol = prec.target_tolerance;
    let s_r = cx.from_f64(s);
    let term = |k: u64| -> R<'_> {
        let base = cx.from_f64(offset + stride * k as f64);
        // (offset + stride·k)^{−s}
        (-&(&base.ln() * &s_r)).exp()
    };
    let a0 = offset.powf(-s);
    // plain partial summation when the first-omitted-term bound reaches the
    // tolerance within a modest number of terms
    let x_need = tol.powf(-1.0 / s);
    let plain_n = ((x_need - offset) / stride).ceil().max(1.0);
    if plain_n.is_finite() && plain_n <= 2000.0 {
        let n = plain_n as u64 + 2;
        let mut sum = cx.zero();
        for k in 0..n {
            let t = term(k);
            sum = if k % 2 == 0 { &sum + &t } else { &sum - &t };
        }
        let bound = term(n).to_f64_up() + rounding_slack(&sum, cx.eps(), n);
        return Ok((sum, bound, n, "alternating-partial-sum"));
    }
    let n = cvz_terms(a0, tol);
    if n > prec.max_terms {
        return Err(NumericError::IterationLimit(format!(
            "alternating series needs {n} accelerated terms, cap is {}",
            prec.max_terms
        )));
    }
    let sum = cvz_sum(cx, n, term);
    let bound = 4.0 * 2.0 * a0 * (3.0 + 8.0f64.sqrt()).powi(-(n as i32))
        + rounding_slack(&sum, cx.eps(), n as u64 * 4);
    Ok((sum, bound, n as u64, "alternating-chebyshev"))
}

/// η(s) = Σ_{n≥1} (−1)^{n−1}/n^s for s > 0.
pub fn eval_eta_series(s: f64, prec: &Precision) -> NumericResult {
    if !(s > 0.0) {
        return Err(NumericError::Domain(format!(
            "eta series requires s > 0, got {s}"
        )));
    }
    let cx = Ctx::new(prec.bits());
    let (sum, bound, terms, method) = alternating_power_sum(&cx, s, 1.0, 1.0, prec)?;
    Ok(NumericValue {
        value: sum.into_real(),
        error_bound: bound,
        working_digits: prec.effective_digits(),
        terms_used: terms,
        method,
    })
}

/// β(s) = Σ_{n≥0} (−1)^n/(2n+1)^s for s > 0.
pub fn eval_beta_series(s: f64, prec: &Precision) -> NumericResult {
    if !(s > 0.0) {
        return Err(NumericError::Domain(format!(
            "beta series requires s > 0, got {s}"
        )));
    }
    let cx = Ctx::new(prec.bits());
    let (sum, bound, terms, method) = alternating_power_sum(&cx, s, 1.0, 2.0, prec)?;
    Ok(NumericValue {
        value: sum.into_real(),
        error_bound: bound,
        working_digits: prec.effective_digits(),
        terms_used: terms,
        method,
    })
}

/// J(s,a) = Σ_{n≥0} (−1)^n/(n+a)^s for s > 0, 0 < a ≤ 1.
pub fn eval_j_direct(s: f64, a: f64, prec: &Precision) -> NumericResult {
    if !(s > 0.0) {
        return Err(NumericError::Domain(format!(
            "J series requires s > 0, got {s}"
        )));
    }
    if !(a > 0.0 && a <= 1.0) {
        return Err(NumericError::Domain(format!(
            "J series requires 0 < a <= 1, got {a}"
        )));
    }
    eval_j_series_any_a(s, a, prec)
}

/// J(s,a) series without the a ≤ 1 gate (internal callers shift a upward).
pub(crate) fn eval_j_series_any_a(s: f64, a: f64, prec: &Precision) -> NumericResult {
    let cx = Ctx::new(prec.bits());
    let (sum, bound, terms, method) = alternating_power_sum(&cx, s, a, 1.0, prec)?;
    Ok(NumericValue {
        value: sum.into_real(),
        error_bound: bound,
        working_digits: prec.effective_digits(),
        terms_used: terms,
        method,
    })
}

/// λ(s) = Σ_{n≥0} (2n+1)^{−s} for s > 1: direct partial sum completed by the
/// Euler–Maclaurin tail with exact Bernoulli coefficients.
pub fn eval_lambda_series(s: f64, prec: &Precision) -> NumericResult {
    if !(s > 1.0) {
        return Err(NumericError::Domain(format!(
            "lambda series requires s > 1, got {s}"
        )));
    }
    let cx = Ctx::new(prec.bits());
    let tol = prec.target_tolerance;
    let digits = prec.effective_digits();
    let s_r = cx.from_f64(s);

    let mut n_terms = (digits as u64 / 2).max(24);
    for _attempt in 0..5 {
        // head Σ_{n<N} (2n+1)^{−s}
        let mut head = cx.zero();
        for n in 0..n_terms {
            let base = cx.from_u64(2 * n + 1);
            head = &head + &(-&(&base.ln() * &s_r)).exp();
        }
        let big_n = cx.from_u64(2 * n_terms + 1); // 2N+1
        let nf = (-&(&big_n.ln() * &s_r)).exp(); // (2N+1)^{−s}
        // ∫_N^∞ (2u+1)^{−s} du = (2N+1)^{1−s}/(2(s−1))
        let integral = &(&nf * &big_n) / &(&cx.two() * &cx.from_f64(s - 1.0));
        let mut tail = &integral + &(&nf * &cx.half());
        // correction terms B_{2k}·2^{2k−1}·(s)_{2k−1}·(2N+1)^{−s−2k+1}/(2k)!
        let mut poch = s_r.clone(); // (s)_1
        let mut fact = cx.two(); // (2k)!
        let mut npow = &nf * &big_n.recip(); // (2N+1)^{−s−1}
        let inv_n2 = big_n.powi(-2);
        let pi_sq_inv = cx.pi().powi(-2);
        let mut pi_pow = pi_sq_inv.clone(); // π^{−2K}
        let mut k = 1u32;
        let mut bound_f: f64;
        loop {
            let b2k = cx.from_rational(&bernoulli_number(2 * k));
            let coeff = &(&b2k * &cx.two().powi(2 * k as i64 - 1)) * &(&poch / &fact);
            tail = &tail + &(&coeff * &npow);
            // remainder after K = k: 2·(s)_{2K−1}·(2N+1)^{1−s−2K}·π^{−2K}·(2N+1)^{0}
            let rem = &(&(&cx.two() * &poch) * &npow) * &pi_pow;
            bound_f = rem.to_f64_up();
            if bound_f <= tol * 0.25 {
                break;
            }
            if k >= 80 {
                break;
            }
            // advance (s)_{2k−1} -> (s)_{2k+1}, (2k)! -> (2k+2)!, powers
            poch = &poch * &(&(&s_r + &cx.from_u64(2 * k as u64 - 1)) * &(&s_r + &cx.from_u64(2 * k as u64)));
            fact = &fact * &cx.from_u64((2 * k as u64 + 1) * (2 * k as u64 + 2));
            npow = &npow * &inv_n2;
            pi_pow = &pi_pow * &pi_sq_inv;
            k += 1;
        }
        if bound_f <= tol * 0.25 {
            let value = &head + &tail;
            let bound = bound_f + rounding_slack(&value, cx.eps(), n_terms + 4 * k as u64);
            return Ok(NumericValue {
                value: value.into_real(),
                error_bound: bound,
                working_digits: digits,
                terms_used: n_terms + k as u64,
                method: "direct-series+euler-maclaurin",
            });
        }
        n_terms *= 2;
        if n_terms > prec.max_terms as u64 {
            break;
        }
    }
    Err(NumericError::Precision(format!(
        "Euler-Maclaurin tail for lambda({s}) did not reach tolerance {tol}"
    )))
}

/// ζ(s) = λ(s)/(1 − 2^{−s}) for s > 1.
pub fn eval_zeta_via_lambda(s: f64, prec: &Precision) -> NumericResult {
    let lam = eval_lambda_series(s, prec)?;
    let cx = Ctx::new(prec.bits());
    // 1 − 2^{−s} = −expm1(−s·ln 2)
    let factor = -&(&cx.from_f64(-s) * &cx.ln2()).expm1();
    let value = &cx.real(&lam.value) / &factor;
    let factor_f = factor.to_f64();
    let bound = lam.error_bound / factor_f * (1.0 + 1e-12) + rounding_slack(&value, cx.eps(), 8);
    Ok(NumericValue {
        value: value.into_real(),
        error_bound: bound,
        working_digits: lam.working_digits,
        terms_used: lam.terms_used,
        method: "zeta-via-lambda",
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms::{beta_odd, eta_even, lambda_even, zeta_even};
    use crate::numeric::pi_power_to_real;

    fn assert_covered(nv: &NumericValue, exact_digits: &str, tol: f64) {
        let cx = Ctx::new(256);
        let exact = cx.parse(exact_digits).into_real();
        let err = nv.value.abs_diff_f64(&exact);
        assert!(
            err <= nv.error_bound,
            "claimed bound {:e} but deviation {:e} ({})",
            nv.error_bound,
            err,
            nv.method
        );
        assert!(nv.error_bound <= tol, "bound {:e} above tolerance {tol:e}", nv.error_bound);
    }

    #[test]
    fn lambda_series_known_values() {
        let prec = Precision::default();
        for (m, tol) in [(1u32, 1e-25), (2, 1e-25), (3, 1e-25)] {
            let nv = eval_lambda_series(2.0 * m as f64, &prec).unwrap();
            let exact = pi_power_to_real(&lambda_even(m), 60);
            let err = nv.value.abs_diff_f64(&exact);
            assert!(err <= nv.error_bound, "m={m}: err {err:e} > bound {:e}", nv.error_bound);
            assert!(nv.error_bound <= tol);
        }
    }

    #[test]
    fn lambda_series_near_one_is_finite() {
        let s = 1.0001f64;
        let prec = Precision::with_tolerance(1e-20);
        let nv = eval_lambda_series(s, &prec).unwrap();
        assert!(nv.to_f64() > 4999.0 && nv.to_f64() < 5002.0);
        // independent route: λ(s) = η(s)·(1−2^{−s})/(1−2^{1−s})
        let eta = eval_eta_series(s, &prec).unwrap();
        let cx = Ctx::new(prec.bits());
        let s_r = cx.from_f64(s);
        let num = -&(-&(&s_r * &cx.ln2())).expm1(); // 1 − 2^{−s}
        let den = -&(&(&cx.one() - &s_r) * &cx.ln2()).expm1(); // 1 − 2^{1−s}
        let via_eta = &(&cx.real(&eta.value) * &num) / &den;
        let d = (&cx.real(&nv.value) - &via_eta).abs().to_f64();
        let scale = (num.to_f64() / den.to_f64()).abs();
        let allowed = nv.error_bound + eta.error_bound * scale * 1.01 + 1e-22;
        assert!(d <= allowed, "diff {d:e} > allowed {allowed:e}");
    }

    #[test]
    fn eta_series_values() {
        let prec = Precision::default();
        let nv = eval_eta_series(1.0, &prec).unwrap();
        assert_covered(&nv, "0.69314718055994530941723212145817656807550013436026", 1e-30);
        let nv = eval_eta_series(2.0, &prec).unwrap();
        let exact = pi_power_to_real(&eta_even(1), 60);
        assert!(nv.value.abs_diff_f64(&exact) <= nv.error_bound);
        // slowly converging region
        let nv = eval_eta_series(0.5, &prec).unwrap();
        assert_covered(&nv, "0.60489864342163037024726591423595549975976254513025", 1e-30);
    }

    #[test]
    fn beta_series_values() {
        let prec = Precision::default();
        let nv = eval_beta_series(3.0, &prec).unwrap();
        let exact = pi_power_to_real(&beta_odd(1), 60);
        assert!(nv.value.abs_diff_f64(&exact) <= nv.error_bound);
        assert!(nv.error_bound <= 1e-25);
        let nv = eval_beta_series(2.0, &prec).unwrap();
        assert_covered(&nv, "0.91596559417721901505460351493238411077414937428167", 1e-25);
    }

    #[test]
    fn j_direct_values() {
        let prec = Precision::default();
        // J(s,1) = η(s)
        let j = eval_j_direct(2.0, 1.0, &prec).unwrap();
        let eta = eval_eta_series(2.0, &prec).unwrap();
        assert!(j.agrees_with(&eta));
        // J(2,1/2) = 4·β(2)
        let j = eval_j_direct(2.0, 0.5, &prec).unwrap();
        let beta = eval_beta_series(2.0, &prec).unwrap();
        let d = (j.to_f64() - 4.0 * beta.to_f64()).abs();
        assert!(d <= 4.0 * beta.error_bound + j.error_bound + 1e-28, "d={d:e}");
        // J(1,1) = ln 2
        let j = eval_j_direct(1.0, 1.0, &prec).unwrap();
        assert_covered(&j, "0.69314718055994530941723212145817656807550013436026", 1e-25);
        // reference values for the cross-representation grid
        let j = eval_j_direct(0.5, 0.25, &prec).unwrap();
        assert_covered(&j, "1.4741131224380956849487227199918583331514663784201", 1e-25);
        let j = eval_j_direct(3.5, 0.25, &prec).unwrap();
        assert_covered(&j, "127.58876268802992233740593379310758723162083108524", 1e-23);
    }

    #[test]
    fn zeta_via_lambda_values() {
        let prec = Precision::default();
        for (m, _) in [(1u32, ()), (2, ()), (3, ())] {
            let nv = eval_zeta_via_lambda(2.0 * m as f64, &prec).unwrap();
            let exact = pi_power_to_real(&zeta_even(m), 60);
            assert!(
                nv.value.abs_diff_f64(&exact) <= nv.error_bound,
                "zeta(2·{m})"
            );
        }
    }

    #[test]
    fn domain_errors() {
        let prec = Precision::default();
        assert!(matches!(
            eval_lambda_series(1.0, &prec),
            Err(NumericError::Domain(_))
        ));
        assert!(matches!(
            eval_eta_series(0.0, &prec),
            Err(NumericError::Domain(_))
        ));
        assert!(matches!(
            eval_beta_series(-1.0, &prec),
            Err(NumericError::Domain(_))
        ));
        assert!(matches!(
            eval_j_direct(2.0, 1.5, &prec),
            Err(NumericError::Domain(_))
        ));
        assert!(matches!(
            eval_j_direct(2.0, 0.0, &prec),
            Err(NumericError::Domain(_))
        ));
    }
}
