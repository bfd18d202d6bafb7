//! Exact integer and rational special-number generators.
//!
//! Bernoulli numbers B_n follow the convention of the generating function
//! t/(e^t − 1), so B_1 = −1/2. Euler polynomials E_n(x) are the coefficients
//! of 2e^{xt}/(e^t + 1), generated by the recurrence
//! E_n(x) = x^n − (1/2)·Σ_{k<n} C(n,k)·E_k(x). Euler numbers are the integers
//! E_n = 2^n·E_n(1/2), the Taylor coefficients of sech(t).
//!
//! All tables are memoized behind mutexes and safe under concurrent first
//! use; [`precompute`] builds them eagerly for parallel workloads.

use crate::poly::RationalPolynomial;
use crate::rational::{rat_big, rat_pow, BigRational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::sync::atomic::{AtomicU32, Ordering};
use std::sync::Mutex;

/// Default cap on table indices. Guards against runaway requests; raise it
/// with [`set_table_limit`] when deeper tables are genuinely needed.
pub const DEFAULT_TABLE_LIMIT: u32 = 200;

static TABLE_LIMIT: AtomicU32 = AtomicU32::new(DEFAULT_TABLE_LIMIT);

static FACTORIALS: Mutex<Vec<BigInt>> = Mutex::new(Vec::new());
static BERNOULLI: Mutex<Vec<BigRational>> = Mutex::new(Vec::new());
static EULER_POLYS: Mutex<Vec<RationalPolynomial>> = Mutex::new(Vec::new());
static EULER_NUMBERS: Mutex<Vec<BigInt>> = Mutex::new(Vec::new());

/// Raise or lower the table cap (indices `> limit` panic).
pub fn set_table_limit(limit: u32) {
    TABLE_LIMIT.store(limit, Ordering::SeqCst);
}

pub fn table_limit() -> u32 {
    TABLE_LIMIT.load(Ordering::SeqCst)
}

fn check_limit(n: u32, what: &str) {
    let limit = table_limit();
    assert!(
        n <= limit,
        "{what} index {n} exceeds the table limit {limit}; call set_table_limit first"
    );
}

/// Binomial coefficient C(n, k); zero when k > n.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// n! with a memoized table.
pub fn factorial(n: u32) -> BigInt {
    let mut table = FACTORIALS.lock().expect("factorial table lock");
    if table.is_empty() {
        table.push(BigInt::one());
    }
    while table.len() <= n as usize {
        let next = table.last().unwrap() * BigInt::from(table.len());
        table.push(next);
    }
    table[n as usize].clone()
}

/// Akiyama–Tanigawa triangle for B⁺_0..B⁺_n (the B_1 = +1/2 convention).
fn bernoulli_plus_table(n: usize) -> Vec<BigRational> {
    let mut row: Vec<BigRational> = (0..=n)
        .map(|j| BigRational::new(BigInt::one(), BigInt::from(j as u64 + 1)))
        .collect();
    let mut out = Vec::with_capacity(n + 1);
    out.push(row[0].clone());
    for m in 1..=n {
        for j in 0..=(n - m) {
            let d = &row[j] - &row[j + 1];
            row[j] = d * rat_big(BigInt::from(j as u64 + 1));
        }
        out.push(row[0].clone());
    }
    out
}

/// Bernoulli number B_n (B_1 = −1/2); memoized.
pub fn bernoulli_number(n: u32) -> BigRational {
    check_limit(n, "Bernoulli");
    let mut table = BERNOULLI.lock().expect("Bernoulli table lock");
    if table.len() <= n as usize {
        // The triangle is cheapest rebuilt whole; grow geometrically.
        let target = (n as usize).max(table.len() * 2).max(32);
        let plus = bernoulli_plus_table(target);
        *table = plus
            .into_iter()
            .enumerate()
            .map(|(k, b)| if k % 2 == 1 { -b } else { b })
            .collect();
    }
    table[n as usize].clone()
}

/// Bernoulli polynomial B_n(x) = Σ_k C(n,k)·B_k·x^{n−k}.
pub fn bernoulli_polynomial(n: u32) -> RationalPolynomial {
    check_limit(n, "Bernoulli polynomial");
    let mut coeffs = vec![BigRational::zero(); n as usize + 1];
    for k in 0..=n {
        let c = rat_big(binomial(n as u64, k as u64)) * bernoulli_number(k);
        coeffs[(n - k) as usize] = c;
    }
    RationalPolynomial::new(coeffs)
}

fn extend_euler_polys(table: &mut Vec<RationalPolynomial>, n: usize) {
    if table.is_empty() {
        table.push(RationalPolynomial::one());
    }
    while table.len() <= n {
        let m = table.len();
        // E_m(x) = x^m − (1/2)·Σ_{k<m} C(m,k)·E_k(x)
        let mut sum = RationalPolynomial::zero();
        for (k, e) in table.iter().enumerate().take(m) {
            sum = sum.add(&e.scale(&rat_big(binomial(m as u64, k as u64))));
        }
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let e_m = crate::poly::x_power(m).sub(&sum.scale(&half));
        table.push(e_m);
    }
}

/// Euler polynomial E_n(x); memoized.
pub fn euler_polynomial(n: u32) -> RationalPolynomial {
    check_limit(n, "Euler polynomial");
    let mut table = EULER_POLYS.lock().expect("Euler table lock");
    extend_euler_polys(&mut table, n as usize);
    table[n as usize].clone()
}

/// Exact value E_n(q).
pub fn euler_poly_at(n: u32, q: &BigRational) -> BigRational {
    check_limit(n, "Euler polynomial");
    let mut table = EULER_POLYS.lock().expect("Euler table lock");
    extend_euler_polys(&mut table, n as usize);
    if q.is_zero() {
        table[n as usize].coefficient(0)
    } else {
        table[n as usize].eval(q)
    }
}

/// E_n(0), the constant term of E_n(x).
pub fn euler_at_zero(n: u32) -> BigRational {
    euler_poly_at(n, &BigRational::zero())
}

/// Integer Euler number E_n = 2^n·E_n(1/2); memoized.
pub fn euler_number(n: u32) -> BigInt {
    check_limit(n, "Euler number");
    let mut table = EULER_NUMBERS.lock().expect("Euler number table lock");
    while table.len() <= n as usize {
        let m = table.len() as u32;
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let v = euler_poly_at(m, &half) * rat_pow(&rat_big(BigInt::from(2)), m as i64);
        assert!(v.denom().is_one(), "E_{m} = 2^{m}·E_{m}(1/2) must be an integer");
        table.push(v.to_integer());
    }
    table[n as usize].clone()
}

/// Eagerly build every table up to `max_index`. After this returns, all
/// reads of the exact layer are lock-cheap and safe from any thread.
pub fn precompute(max_index: u32) {
    check_limit(max_index, "precompute");
    factorial(max_index);
    bernoulli_number(max_index);
    euler_polynomial(max_index);
    euler_number(max_index);
}
