//! Closed-form special values.
//!
//! Even-argument values of ζ and λ, odd-argument values of β, and even
//! values of η are exact rational multiples of powers of π:
//!
//!   ζ(2m) = (−1)^{m−1}·B_{2m}·2^{2m}/(2·(2m)!)·π^{2m}
//!   λ(2m) = (−1)^m·E_{2m−1}(0)/(4·(2m−1)!)·π^{2m}
//!   β(2m+1) = (−1)^m·E_{2m}/(2·(2m)!)·(π/2)^{2m+1}
//!   η(2m) = (1 − 2^{1−2m})·ζ(2m)
//!
//! At non-positive integers the alternating functions reduce to Euler
//! polynomial values: J(−k, a) = E_k(a)/2, β(−k) = E_k/2, and
//! η(−k) = (−1)^k·E_k(0)/2. We also adopt ζ(0) = −1/2, the value that makes
//! the k = 0 term of the ζ–λ convolution match its Bernoulli form B_0 = 1.

use crate::exact::{bernoulli_number, euler_at_zero, euler_number, euler_poly_at, factorial};
use crate::pi_power::PiPower;
use crate::rational::{rat, rat_big, rat_int, rat_pow, BigRational};
use num_traits::Signed;

fn sign(m: u32) -> BigRational {
    if m % 2 == 0 {
        rat_int(1)
    } else {
        rat_int(-1)
    }
}

/// ζ(2m) as c·π^{2m}; ζ(0) = −1/2.
pub fn zeta_even(m: u32) -> PiPower {
    if m == 0 {
        return PiPower::from_rational(rat(-1, 2));
    }
    let two_m = 2 * m;
    let coeff = sign(m + 1)
        * bernoulli_number(two_m)
        * rat_pow(&rat_int(2), two_m as i64)
        / (rat_int(2) * rat_big(factorial(two_m)));
    PiPower::new(coeff, two_m)
}

/// λ(2m) = (−1)^m·π^{2m}/(4·(2m−1)!)·E_{2m−1}(0), m ≥ 1.
pub fn lambda_even(m: u32) -> PiPower {
    assert!(m >= 1, "lambda_even requires m >= 1");
    let coeff = sign(m) * euler_at_zero(2 * m - 1) / (rat_int(4) * rat_big(factorial(2 * m - 1)));
    PiPower::new(coeff, 2 * m)
}

/// β(2m+1) as c·π^{2m+1}, with the power of 2 folded into c.
pub fn beta_odd(m: u32) -> PiPower {
    let coeff = sign(m) * rat_big(euler_number(2 * m))
        / (rat_int(2) * rat_big(factorial(2 * m)) * rat_pow(&rat_int(2), (2 * m + 1) as i64));
    PiPower::new(coeff, 2 * m + 1)
}

/// η(2m) = (1 − 2^{1−2m})·ζ(2m), m ≥ 1.
pub fn eta_even(m: u32) -> PiPower {
    assert!(m >= 1, "eta_even requires m >= 1");
    let factor = rat_int(1) - rat_pow(&rat_int(2), 1 - 2 * m as i64);
    zeta_even(m).scale(&factor)
}

/// λ(2m) computed through ζ: (1 − 2^{−2m})·ζ(2m). Must agree with
/// [`lambda_even`] exactly; the two routes go through different
/// special-number families (Euler vs Bernoulli).
pub fn lambda_from_zeta(m: u32) -> PiPower {
    assert!(m >= 1, "lambda_from_zeta requires m >= 1");
    let factor = rat_int(1) - rat_pow(&rat_int(2), -2 * (m as i64));
    zeta_even(m).scale(&factor)
}

/// J(−k, a) = E_k(a)/2 for 0 < a ≤ 1.
pub fn j_neg_int(k: u32, a: &BigRational) -> BigRational {
    assert!(
        a.is_positive() && *a <= rat_int(1),
        "j_neg_int requires 0 < a <= 1, got {a}"
    );
    euler_poly_at(k, a) / rat_int(2)
}

/// β(−k) = E_k/2.
pub fn beta_neg_int(k: u32) -> BigRational {
    rat_big(euler_number(k)) / rat_int(2)
}

/// η(−k) = (−1)^k·E_k(0)/2.
pub fn eta_neg_int(k: u32) -> BigRational {
    sign(k) * euler_at_zero(k) / rat_int(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn pp(num: i64, den: i64, exp: u32) -> PiPower {
        PiPower::new(rat(num, den), exp)
    }

    #[test]
    fn zeta_values() {
        assert_eq!(zeta_even(1), pp(1, 6, 2));
        assert_eq!(zeta_even(2), pp(1, 90, 4));
        assert_eq!(zeta_even(3), pp(1, 945, 6));
        assert_eq!(zeta_even(0), PiPower::from_rational(rat(-1, 2)));
    }

    #[test]
    fn lambda_values() {
        assert_eq!(lambda_even(1), pp(1, 8, 2));
        assert_eq!(lambda_even(2), pp(1, 96, 4));
        assert_eq!(lambda_even(3), pp(1, 960, 6));
        assert_eq!(lambda_even(4), pp(17, 161280, 8));
    }

    #[test]
    #[should_panic(expected = "m >= 1")]
    fn lambda_rejects_zero() {
        let _ = lambda_even(0);
    }

    #[test]
    fn beta_values() {
        assert_eq!(beta_odd(0), pp(1, 4, 1));
        assert_eq!(beta_odd(1), pp(1, 32, 3));
        assert_eq!(beta_odd(2), pp(5, 1536, 5));
    }

    #[test]
    fn eta_values() {
        assert_eq!(eta_even(1), pp(1, 12, 2));
        assert_eq!(eta_even(2), pp(7, 720, 4));
        assert_eq!(eta_even(3), pp(31, 30240, 6));
    }

    #[test]
    fn lambda_routes_agree_and_are_positive() {
        for m in 1..=100 {
            let via_euler = lambda_even(m);
            let via_zeta = lambda_from_zeta(m);
            assert_eq!(via_euler, via_zeta, "m={m}");
            assert!(via_euler.coefficient().is_positive());
            assert!(zeta_even(m).coefficient().is_positive());
            assert_eq!(via_euler.exponent(), 2 * m);
        }
        assert_eq!(lambda_from_zeta(1), pp(1, 8, 2));
        assert_eq!(lambda_from_zeta(2), pp(1, 96, 4));
        assert_eq!(lambda_from_zeta(3), pp(1, 960, 6));
    }

    #[test]
    fn eta_lambda_zeta_relation() {
        // η(2m) = 2λ(2m) − ζ(2m)
        for m in 1..=40 {
            let lhs = eta_even(m);
            let rhs = lambda_even(m).scale(&rat_int(2)).sub(&zeta_even(m));
            assert_eq!(lhs, rhs, "m={m}");
        }
    }

    #[test]
    fn beta_exponents() {
        for m in 0..=20 {
            assert_eq!(beta_odd(m).exponent(), 2 * m + 1);
        }
    }

    #[test]
    fn negative_argument_values() {
        for a in [rat(1, 3), rat(1, 2), rat_int(1)] {
            assert_eq!(j_neg_int(0, &a), rat(1, 2));
        }
        for m in 1..=6 {
            assert!(j_neg_int(2 * m, &rat_int(1)).is_zero());
        }
        assert!(j_neg_int(1, &rat(1, 2)).is_zero());

        assert_eq!(beta_neg_int(0), rat(1, 2));
        assert_eq!(beta_neg_int(1), rat_int(0));
        assert_eq!(beta_neg_int(2), rat(-1, 2));

        assert_eq!(eta_neg_int(0), rat(1, 2));
        assert_eq!(eta_neg_int(1), rat(1, 4));
        assert_eq!(eta_neg_int(2), rat_int(0));
    }

    #[test]
    #[should_panic(expected = "0 < a <= 1")]
    fn j_neg_int_domain() {
        let _ = j_neg_int(2, &rat(3, 2));
    }

    #[test]
    fn j_specializations_at_negative_integers() {
        for k in 0..=12 {
            // J(−k, 1) = η(−k)
            assert_eq!(j_neg_int(k, &rat_int(1)), eta_neg_int(k), "k={k}");
            // J(−k, 1/2) = 2^{−k}·β(−k)
            let lhs = j_neg_int(k, &rat(1, 2));
            let rhs = rat_pow(&rat_int(2), -(k as i64)) * beta_neg_int(k);
            assert_eq!(lhs, rhs, "k={k}");
        }
    }
}
