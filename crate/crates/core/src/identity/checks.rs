//! Exact residual checks for every supported recurrence and convolution
//! identity.
//!
//! Each check evaluates LHS − RHS of one identity instance in exact
//! arithmetic. λ-recurrences reduce every term to a rational multiple of the
//! same power of π (the [`PiPower`] algebra asserts the common exponent
//! before subtracting); convolution identities between special numbers use
//! plain rational residuals. An identity holds iff the residual is exactly
//! zero — there is no tolerance anywhere in this module.

use crate::closed_forms::{beta_odd, lambda_even, zeta_even};
use crate::exact::{
    bernoulli_number, bernoulli_polynomial, binomial, euler_at_zero, euler_poly_at, factorial,
};
use crate::identity::report::{timed_report, IdentityReport, Residual};
use crate::identity::{ExcludedParameter, IdentityId};
use crate::pi_power::PiPower;
use crate::rational::{rat, rat_big, rat_int, rat_pow, rational_string, BigRational};
use num_traits::{One, Signed, Zero};

fn sgn(k: u32) -> BigRational {
    if k % 2 == 0 {
        rat_int(1)
    } else {
        rat_int(-1)
    }
}

fn delta0(k: u32) -> BigRational {
    if k == 0 {
        rat_int(1)
    } else {
        rat_int(0)
    }
}

fn inv_factorial(n: u32) -> BigRational {
    rat_big(factorial(n)).recip()
}

fn p_int(m: u32) -> String {
    m.to_string()
}

fn p_rat(r: &BigRational) -> String {
    rational_string(r)
}

/// λ(2m) = (−1)^{m−1}·(π^{2m}/(4·(2m)!) + Σ_{k=1}^{m−1} (−1)^{m−k}·π^{2k}/(2k+1)!·λ(2m−2k)).
pub fn check_lettington(m: u32) -> IdentityReport {
    assert!(m >= 1);
    timed_report(IdentityId::Lettington.as_str(), &[("m", p_int(m))], || {
        let mut rhs = PiPower::new(rat(1, 4) * inv_factorial(2 * m), 2 * m);
        for k in 1..m {
            let c = sgn(m - k) * inv_factorial(2 * k + 1);
            rhs = rhs.add(&PiPower::new(c, 2 * k).mul(&lambda_even(m - k)));
        }
        rhs = rhs.scale(&sgn(m + 1));
        Residual::Pi(lambda_even(m).sub(&rhs))
    })
}

/// Recurrence from the odd binomial pairing α^{2k−1} + (α−1)^{2k−1};
/// the hypothesis excludes α = 1/2 (both pairings collapse there).
pub fn check_alpha_odd(m: u32, alpha: &BigRational) -> Result<IdentityReport, ExcludedParameter> {
    assert!(m >= 1);
    if *alpha == rat(1, 2) {
        return Err(ExcludedParameter("alpha = 1/2 is excluded".to_string()));
    }
    let a = alpha.clone();
    Ok(timed_report(
        IdentityId::AlphaOdd.as_str(),
        &[("m", p_int(m)), ("alpha", p_rat(alpha))],
        move || {
            let am1 = &a - rat_int(1);
            let head = sgn(m + 1)
                * (rat_pow(&a, 2 * m as i64) - rat_pow(&am1, 2 * m as i64))
                * rat(1, 4)
                * inv_factorial(2 * m);
            let mut acc = PiPower::new(head, 2 * m + 2);
            for k in 1..=m {
                let c = sgn(k)
                    * (rat_pow(&a, 2 * k as i64 - 1) + rat_pow(&am1, 2 * k as i64 - 1))
                    * inv_factorial(2 * k - 1);
                acc = acc.add(&PiPower::new(c, 2 * k).mul(&lambda_even(m - k + 1)));
            }
            Residual::Pi(acc)
        },
    ))
}

/// Recurrence from the even binomial pairing α^{2k} + (α−1)^{2k}, any α,
/// with the convention 0^0 = 1.
pub fn check_alpha_even(m: u32, alpha: &BigRational) -> IdentityReport {
    let a = alpha.clone();
    timed_report(
        IdentityId::AlphaEven.as_str(),
        &[("m", p_int(m)), ("alpha", p_rat(alpha))],
        move || {
            let am1 = &a - rat_int(1);
            let head = sgn(m + 1)
                * (rat_pow(&a, 2 * m as i64 + 1) - rat_pow(&am1, 2 * m as i64 + 1))
                * rat(1, 4)
                * inv_factorial(2 * m + 1);
            let mut acc = PiPower::new(head, 2 * m + 2);
            for k in 0..=m {
                let c = sgn(k)
                    * (rat_pow(&a, 2 * k as i64) + rat_pow(&am1, 2 * k as i64))
                    * inv_factorial(2 * k);
                acc = acc.add(&PiPower::new(c, 2 * k).mul(&lambda_even(m - k + 1)));
            }
            Residual::Pi(acc)
        },
    )
}

/// α = 1 specialization, with the Kronecker-delta doubling of the k = 0 term.
pub fn check_alpha_one(m: u32) -> IdentityReport {
    timed_report(IdentityId::AlphaOne.as_str(), &[("m", p_int(m))], || {
        let head = sgn(m + 1) * rat(1, 4) * inv_factorial(2 * m + 1);
        let mut acc = PiPower::new(head, 2 * m + 2);
        for k in 0..=m {
            let c = sgn(k) * (rat_int(1) + delta0(k)) * inv_factorial(2 * k);
            acc = acc.add(&PiPower::new(c, 2 * k).mul(&lambda_even(m - k + 1)));
        }
        Residual::Pi(acc)
    })
}

/// α = 1/2 specialization with the 2^{2m−2k+1} weights.
pub fn check_alpha_half(m: u32) -> IdentityReport {
    timed_report(IdentityId::AlphaHalf.as_str(), &[("m", p_int(m))], || {
        let head = sgn(m + 1) * rat(1, 4) * inv_factorial(2 * m + 1);
        let mut acc = PiPower::new(head, 2 * m + 2);
        for k in 0..=m {
            let c = sgn(k)
                * rat_pow(&rat_int(2), (2 * m - 2 * k + 1) as i64)
                * inv_factorial(2 * k);
            acc = acc.add(&PiPower::new(c, 2 * k).mul(&lambda_even(m - k + 1)));
        }
        Residual::Pi(acc)
    })
}

/// Dyadic analogue of the Lettington recurrence:
/// λ(2m) = (−1)^{m−1}·(π^{2m}/(2^{2m+1}(2m−1)!) + Σ (−1)^{m−k}·π^{2k}/(2^{2k}(2k)!)·λ(2m−2k)).
pub fn check_dyadic(m: u32) -> IdentityReport {
    assert!(m >= 1);
    timed_report(IdentityId::Dyadic.as_str(), &[("m", p_int(m))], || {
        let head = rat_pow(&rat_int(2), -(2 * m as i64 + 1)) * inv_factorial(2 * m - 1);
        let mut rhs = PiPower::new(head, 2 * m);
        for k in 1..m {
            let c = sgn(m - k) * rat_pow(&rat_int(2), -(2 * k as i64)) * inv_factorial(2 * k);
            rhs = rhs.add(&PiPower::new(c, 2 * k).mul(&lambda_even(m - k)));
        }
        rhs = rhs.scale(&sgn(m + 1));
        Residual::Pi(lambda_even(m).sub(&rhs))
    })
}

fn alternating_power_sum(n: u32, e: i64) -> BigRational {
    // 2·Σ_{j=1}^{n−1}(−1)^j·j^e + (−1)^n·n^e
    let mut s = BigRational::zero();
    for j in 1..n {
        s += sgn(j) * rat_pow(&rat_int(j as i64), e);
    }
    rat_int(2) * s + sgn(n) * rat_pow(&rat_int(n as i64), e)
}

/// Integer-parameter recurrence obtained by alternating sums of odd powers.
pub fn check_alternating_power_odd(m: u32, n: u32) -> IdentityReport {
    assert!(m >= 1 && n >= 1);
    timed_report(
        IdentityId::AlternatingPowerOdd.as_str(),
        &[("m", p_int(m)), ("n", p_int(n))],
        || {
            let head =
                sgn(m + 1) * rat(1, 4) * alternating_power_sum(n, 2 * m as i64) * inv_factorial(2 * m);
            let mut acc = PiPower::new(head, 2 * m + 2);
            for k in 1..=m {
                let c = sgn(n) * sgn(k)
                    * rat_pow(&rat_int(n as i64), 2 * k as i64 - 1)
                    * inv_factorial(2 * k - 1);
                acc = acc.add(&PiPower::new(c, 2 * k).mul(&lambda_even(m - k + 1)));
            }
            Residual::Pi(acc)
        },
    )
}

/// Companion recurrence from alternating sums of even powers.
pub fn check_alternating_power_even(m: u32, n: u32) -> IdentityReport {
    assert!(n >= 1);
    timed_report(
        IdentityId::AlternatingPowerEven.as_str(),
        &[("m", p_int(m)), ("n", p_int(n))],
        || {
            let head = sgn(m + 1)
                * rat(1, 4)
                * alternating_power_sum(n, 2 * m as i64 + 1)
                * inv_factorial(2 * m + 1);
            let mut acc = PiPower::new(head, 2 * m + 2);
            for k in 0..=m {
                let c = sgn(k)
                    * (sgn(n) * rat_pow(&rat_int(n as i64), 2 * k as i64) - delta0(k))
                    * inv_factorial(2 * k);
                acc = acc.add(&PiPower::new(c, 2 * k).mul(&lambda_even(m - k + 1)));
            }
            Residual::Pi(acc)
        },
    )
}

/// Recurrence from the symmetric second difference (α−1)^{2m} + (α+1)^{2m} − 2α^{2m}.
pub fn check_symmetric_odd(m: u32, alpha: &BigRational) -> IdentityReport {
    assert!(m >= 1);
    let a = alpha.clone();
    timed_report(
        IdentityId::SymmetricOdd.as_str(),
        &[("m", p_int(m)), ("alpha", p_rat(alpha))],
        move || {
            let am1 = &a - rat_int(1);
            let ap1 = &a + rat_int(1);
            let head = sgn(m)
                * rat(1, 4)
                * inv_factorial(2 * m)
                * (rat_pow(&am1, 2 * m as i64) + rat_pow(&ap1, 2 * m as i64)
                    - rat_int(2) * rat_pow(&a, 2 * m as i64));
            let mut acc = PiPower::new(head, 2 * m + 2);
            for k in 1..=m {
                let c = sgn(k)
                    * (rat_pow(&am1, 2 * k as i64 - 1) - rat_pow(&ap1, 2 * k as i64 - 1))
                    * inv_factorial(2 * k - 1);
                acc = acc.add(&PiPower::new(c, 2 * k).mul(&lambda_even(m - k + 1)));
            }
            Residual::Pi(acc)
        },
    )
}

/// Companion recurrence with the symmetric even pairing
/// (α−1)^{2k} + (α+1)^{2k} + 2α^{2k}, with 0^0 = 1.
pub fn check_symmetric_even(m: u32, alpha: &BigRational) -> IdentityReport {
    let a = alpha.clone();
    timed_report(
        IdentityId::SymmetricEven.as_str(),
        &[("m", p_int(m)), ("alpha", p_rat(alpha))],
        move || {
            let am1 = &a - rat_int(1);
            let ap1 = &a + rat_int(1);
            let head = sgn(m)
                * rat(1, 4)
                * inv_factorial(2 * m + 1)
                * (rat_pow(&am1, 2 * m as i64 + 1) - rat_pow(&ap1, 2 * m as i64 + 1));
            let mut acc = PiPower::new(head, 2 * m + 2);
            for k in 0..=m {
                let c = sgn(k)
                    * (rat_pow(&am1, 2 * k as i64)
                        + rat_pow(&ap1, 2 * k as i64)
                        + rat_int(2) * rat_pow(&a, 2 * k as i64))
                    * inv_factorial(2 * k);
                acc = acc.add(&PiPower::new(c, 2 * k).mul(&lambda_even(m - k + 1)));
            }
            Residual::Pi(acc)
        },
    )
}

/// Recurrence with 3^{−2m−1} scaling coming from the value E_{2m+1}(1/3):
/// (−1)^{m+1}·2(1−3^{−2m−1})·λ(2m+2)
///   = π^{2m+2}/(3^{2m+1}(2m+1)!) + 4·Σ_{k=0}^m (−1)^{k+1}·π^{2m−2k}/(3^{2m−2k}(2m−2k)!)·λ(2k+2).
pub fn check_one_third_recurrence(m: u32) -> IdentityReport {
    timed_report(IdentityId::OneThirdRecurrence.as_str(), &[("m", p_int(m))], || {
        let lhs = lambda_even(m + 1).scale(
            &(sgn(m + 1) * rat_int(2) * (rat_int(1) - rat_pow(&rat_int(3), -(2 * m as i64 + 1)))),
        );
        let mut rhs = PiPower::new(
            rat_pow(&rat_int(3), -(2 * m as i64 + 1)) * inv_factorial(2 * m + 1),
            2 * m + 2,
        );
        for k in 0..=m {
            let c = rat_int(4)
                * sgn(k + 1)
                * rat_pow(&rat_int(3), -(2 * (m - k) as i64))
                * inv_factorial(2 * (m - k));
            rhs = rhs.add(&PiPower::new(c, 2 * (m - k)).mul(&lambda_even(k + 1)));
        }
        Residual::Pi(lhs.sub(&rhs))
    })
}

/// Euler-polynomial convolution Σ_k (α^{n−k} − (−1)^k·(2x−1+α)^{n−k})·C(n,k)·E_k(x) = 0.
pub fn check_euler_shift_convolution(
    n: u32,
    x: &BigRational,
    alpha: &BigRational,
) -> IdentityReport {
    let (x, alpha) = (x.clone(), alpha.clone());
    timed_report(
        IdentityId::EulerShiftConvolution.as_str(),
        &[("n", p_int(n)), ("x", p_rat(&x)), ("alpha", p_rat(&alpha))],
        move || {
            let shifted = rat_int(2) * &x - rat_int(1) + &alpha;
            let mut acc = BigRational::zero();
            for k in 0..=n {
                let w = rat_pow(&alpha, (n - k) as i64)
                    - sgn(k) * rat_pow(&shifted, (n - k) as i64);
                acc += w * rat_big(binomial(n as u64, k as u64)) * euler_poly_at(k, &x);
            }
            Residual::Rational(acc)
        },
    )
}

/// Euler-polynomial convolution selecting even α-powers:
/// Σ_k (−1)^{n−k}·C(n,k)·((2x+α−1)^k + (2x−α−1)^k)/2·E_{n−k}(x)
///   = Σ_{k≤⌊n/2⌋} C(n,2k)·E_{n−2k}(x)·α^{2k}.
pub fn check_euler_even_power_convolution(
    n: u32,
    x: &BigRational,
    alpha: &BigRational,
) -> IdentityReport {
    let (x, alpha) = (x.clone(), alpha.clone());
    timed_report(
        IdentityId::EulerEvenPowerConvolution.as_str(),
        &[("n", p_int(n)), ("x", p_rat(&x)), ("alpha", p_rat(&alpha))],
        move || {
            let plus = rat_int(2) * &x + &alpha - rat_int(1);
            let minus = rat_int(2) * &x - &alpha - rat_int(1);
            let mut lhs = BigRational::zero();
            for k in 0..=n {
                let w = (rat_pow(&plus, k as i64) + rat_pow(&minus, k as i64)) * rat(1, 2);
                lhs += sgn(n - k)
                    * rat_big(binomial(n as u64, k as u64))
                    * w
                    * euler_poly_at(n - k, &x);
            }
            let mut rhs = BigRational::zero();
            for k in 0..=(n / 2) {
                rhs += rat_big(binomial(n as u64, 2 * k as u64))
                    * euler_poly_at(n - 2 * k, &x)
                    * rat_pow(&alpha, 2 * k as i64);
            }
            Residual::Rational(lhs - rhs)
        },
    )
}

/// Gaussian rational a + b·i.
#[derive(Clone, Debug, PartialEq)]
struct GaussRat {
    re: BigRational,
    im: BigRational,
}

impl GaussRat {
    fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    fn zero() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }

    fn mul(&self, other: &Self) -> Self {
        Self::new(
            &self.re * &other.re - &self.im * &other.im,
            &self.re * &other.im + &self.im * &other.re,
        )
    }

    fn add(&self, other: &Self) -> Self {
        Self::new(&self.re + &other.re, &self.im + &other.im)
    }
}

/// Polynomial over the Gaussian rationals, dense in u.
fn gauss_poly_mul(a: &[GaussRat], b: &[GaussRat]) -> Vec<GaussRat> {
    let mut out = vec![GaussRat::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&ai.mul(bj));
        }
    }
    out
}

fn gauss_poly_pow(base: &[GaussRat], mut e: u32) -> Vec<GaussRat> {
    let mut result = vec![GaussRat::new(BigRational::one(), BigRational::zero())];
    let mut b = base.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            result = gauss_poly_mul(&result, &b);
        }
        e >>= 1;
        if e > 0 {
            b = gauss_poly_mul(&b, &b);
        }
    }
    result
}

/// Formal expansion of (i/2)·[(1+iu)^{2m} − (1−iu)^{2m}] over the Gaussian
/// rationals, compared coefficient-by-coefficient with
/// Σ_{k=1}^m (−1)^k·C(2m,2k−1)·u^{2k−1}. The residual is the max-norm of the
/// coefficient difference (imaginary parts must cancel exactly).
pub fn check_imaginary_binomial(m: u32) -> IdentityReport {
    assert!(m >= 1);
    timed_report(IdentityId::ImaginaryBinomial.as_str(), &[("m", p_int(m))], || {
        let one_plus_iu = vec![
            GaussRat::new(BigRational::one(), BigRational::zero()),
            GaussRat::new(BigRational::zero(), BigRational::one()),
        ];
        let one_minus_iu = vec![
            GaussRat::new(BigRational::one(), BigRational::zero()),
            GaussRat::new(BigRational::zero(), -BigRational::one()),
        ];
        let p = gauss_poly_pow(&one_plus_iu, 2 * m);
        let q = gauss_poly_pow(&one_minus_iu, 2 * m);
        let half_i = GaussRat::new(BigRational::zero(), rat(1, 2));
        let lhs: Vec<GaussRat> = p
            .iter()
            .zip(q.iter())
            .map(|(a, b)| half_i.mul(&a.add(&GaussRat::new(-b.re.clone(), -b.im.clone()))))
            .collect();
        let mut max_norm = BigRational::zero();
        for (j, c) in lhs.iter().enumerate() {
            let expected = if j % 2 == 1 {
                let k = (j + 1) / 2;
                sgn(k as u32) * rat_big(binomial(2 * m as u64, j as u64))
            } else {
                BigRational::zero()
            };
            let d_re = (&c.re - expected).abs();
            let d_im = c.im.abs();
            max_norm = max_norm.max(d_re).max(d_im);
        }
        Residual::Rational(max_norm)
    })
}

/// Σ_{k=1}^{m−1} ζ(2k)·ζ(2m−2k) = (m + 1/2)·ζ(2m), m ≥ 2.
pub fn check_zeta_convolution(m: u32) -> IdentityReport {
    assert!(m >= 2);
    timed_report(IdentityId::ZetaConvolution.as_str(), &[("m", p_int(m))], || {
        let mut lhs = PiPower::zero();
        for k in 1..m {
            lhs = lhs.add(&zeta_even(k).mul(&zeta_even(m - k)));
        }
        let rhs = zeta_even(m).scale(&(rat_int(m as i64) + rat(1, 2)));
        Residual::Pi(lhs.sub(&rhs))
    })
}

/// Σ_{k=1}^{m−1} C(2m,2k)·B_{2k}·B_{2m−2k} = −(2m+1)·B_{2m}, m ≥ 2.
pub fn check_bernoulli_convolution(m: u32) -> IdentityReport {
    assert!(m >= 2);
    timed_report(IdentityId::BernoulliConvolution.as_str(), &[("m", p_int(m))], || {
        let mut lhs = BigRational::zero();
        for k in 1..m {
            lhs += rat_big(binomial(2 * m as u64, 2 * k as u64))
                * bernoulli_number(2 * k)
                * bernoulli_number(2 * (m - k));
        }
        let rhs = -rat_int(2 * m as i64 + 1) * bernoulli_number(2 * m);
        Residual::Rational(lhs - rhs)
    })
}

/// Σ_{k=1}^m λ(2k)·λ(2m−2k+2) = (m + 1/2)·λ(2m+2), m ≥ 1.
pub fn check_lambda_convolution(m: u32) -> IdentityReport {
    assert!(m >= 1);
    timed_report(IdentityId::LambdaConvolution.as_str(), &[("m", p_int(m))], || {
        let mut lhs = PiPower::zero();
        for k in 1..=m {
            lhs = lhs.add(&lambda_even(k).mul(&lambda_even(m - k + 1)));
        }
        let rhs = lambda_even(m + 1).scale(&(rat_int(m as i64) + rat(1, 2)));
        Residual::Pi(lhs.sub(&rhs))
    })
}

/// Σ_{k=0}^m β(2k+1)·β(2m−2k+1) = (m + 1/2)·λ(2m+2).
pub fn check_beta_convolution(m: u32) -> IdentityReport {
    timed_report(IdentityId::BetaConvolution.as_str(), &[("m", p_int(m))], || {
        let mut lhs = PiPower::zero();
        for k in 0..=m {
            lhs = lhs.add(&beta_odd(k).mul(&beta_odd(m - k)));
        }
        let rhs = lambda_even(m + 1).scale(&(rat_int(m as i64) + rat(1, 2)));
        Residual::Pi(lhs.sub(&rhs))
    })
}

/// Σ_{k=0}^m 2^{−2k}·ζ(2k)·λ(2m−2k+2) = 0, m ≥ 1, with ζ(0) = −1/2.
pub fn check_zeta_lambda_convolution(m: u32) -> IdentityReport {
    assert!(m >= 1);
    timed_report(
        IdentityId::ZetaLambdaConvolution.as_str(),
        &[("m", p_int(m))],
        || {
            let mut acc = PiPower::zero();
            for k in 0..=m {
                let w = rat_pow(&rat_int(2), -2 * k as i64);
                acc = acc.add(&zeta_even(k).mul(&lambda_even(m - k + 1)).scale(&w));
            }
            Residual::Pi(acc)
        },
    )
}

/// Σ_{k=0}^n C(n,k)·E_k(1/2)·E_{n−k}(1/2) = 2·E_{n+1}(1).
pub fn check_euler_half_convolution(n: u32) -> IdentityReport {
    timed_report(IdentityId::EulerHalfConvolution.as_str(), &[("n", p_int(n))], || {
        let half = rat(1, 2);
        let mut lhs = BigRational::zero();
        for k in 0..=n {
            lhs += rat_big(binomial(n as u64, k as u64))
                * euler_poly_at(k, &half)
                * euler_poly_at(n - k, &half);
        }
        let rhs = rat_int(2) * euler_poly_at(n + 1, &rat_int(1));
        Residual::Rational(lhs - rhs)
    })
}

/// 2^n·B_n(x/2) = Σ_{k=0}^n C(n,k)·B_k·E_{n−k}(x), evaluated at rational x.
pub fn check_euler_bernoulli(n: u32, x: &BigRational) -> IdentityReport {
    let x = x.clone();
    timed_report(
        IdentityId::EulerBernoulli.as_str(),
        &[("n", p_int(n)), ("x", p_rat(&x))],
        move || {
            let lhs = rat_pow(&rat_int(2), n as i64)
                * bernoulli_polynomial(n).eval(&(&x / rat_int(2)));
            let mut rhs = BigRational::zero();
            for k in 0..=n {
                rhs += rat_big(binomial(n as u64, k as u64))
                    * bernoulli_number(k)
                    * euler_poly_at(n - k, &x);
            }
            Residual::Rational(lhs - rhs)
        },
    )
}

/// Odd multiplication formula E_n(x) = m^n·Σ_{k=0}^{m−1} (−1)^k·E_n((x+k)/m).
pub fn check_euler_multiplication(n: u32, x: &BigRational, m: u32) -> IdentityReport {
    assert!(m % 2 == 1, "multiplication formula requires odd m");
    let x = x.clone();
    timed_report(
        IdentityId::EulerMultiplication.as_str(),
        &[("n", p_int(n)), ("x", p_rat(&x)), ("m", p_int(m))],
        move || {
            let lhs = euler_poly_at(n, &x);
            let mut sum = BigRational::zero();
            for k in 0..m {
                let arg = (&x + rat_int(k as i64)) / rat_int(m as i64);
                sum += sgn(k) * euler_poly_at(n, &arg);
            }
            let rhs = rat_pow(&rat_int(m as i64), n as i64) * sum;
            Residual::Rational(lhs - rhs)
        },
    )
}

/// E_{2m+1}(1/3) = (1/2)·(1 − 3^{−2m−1})·E_{2m+1}(0).
pub fn check_euler_one_third(m: u32) -> IdentityReport {
    timed_report(IdentityId::EulerOneThird.as_str(), &[("m", p_int(m))], || {
        let lhs = euler_poly_at(2 * m + 1, &rat(1, 3));
        let rhs = rat(1, 2)
            * (rat_int(1) - rat_pow(&rat_int(3), -(2 * m as i64 + 1)))
            * euler_at_zero(2 * m + 1);
        Residual::Rational(lhs - rhs)
    })
}
