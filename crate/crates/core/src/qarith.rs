//! Exact q-integer combinatorics: q-integers, Gaussian binomials, Galois
//! numbers, q-Pochhammer symbols and the stationary weights on subspaces.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Largest field order accepted anywhere in the crate.
pub const MAX_Q: u64 = 1 << 16;

/// A prime power `q = p^m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct QParams {
    pub q: u64,
    pub p: u64,
    pub m: u32,
}

impl QParams {
    pub fn new(q: u64) -> Result<Self> {
        if q > MAX_Q {
            return Err(Error::FieldTooLarge(q));
        }
        let (p, m) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Ok(QParams { q, p, m })
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` as `p^m` by trial factorization; `None` unless `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut rest = q;
    let mut m = 0;
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

pub fn q_pow(q: u64, e: u64) -> BigInt {
    Pow::pow(BigInt::from(q), e)
}

/// `(n)_q = 1 + q + ... + q^{n-1}`.
pub fn q_int(q: u64, n: u64) -> BigInt {
    let qb = BigInt::from(q);
    let mut acc = BigInt::zero();
    let mut term = BigInt::one();
    for _ in 0..n {
        acc += &term;
        term *= &qb;
    }
    acc
}

/// Gaussian binomial coefficient; zero when `n < 0`, `k < 0` or `k > n`.
pub fn q_binomial(q: u64, n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    if q == 1 {
        let mut acc = BigInt::one();
        for i in 0..k {
            acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
        }
        return acc;
    }
    // Every partial product is itself a Gaussian binomial, so each division is exact.
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= q_pow(q, n - i) - 1;
        acc /= q_pow(q, i + 1) - 1;
    }
    acc
}

/// Total number of subspaces of `F_q^n`.
pub fn galois_number(q: u64, n: u64) -> BigInt {
    (0..=n as i64).map(|k| q_binomial(q, n as i64, k)).sum()
}

/// `P_q(n) = prod_{i<n} (1 + q^i)`.
pub fn pi_normalizer(q: u64, n: u64) -> BigInt {
    (0..n).map(|i| q_pow(q, i) + 1).product()
}

/// `(a; q)_j = prod_{i<j} (1 - a q^i)`.
pub fn q_pochhammer(a: &BigRational, q: &BigRational, j: u64) -> BigRational {
    let one = BigRational::one();
    let mut acc = BigRational::one();
    let mut aq = a.clone();
    for _ in 0..j {
        acc *= &one - &aq;
        if acc.is_zero() {
            break;
        }
        aq *= q;
    }
    acc
}

pub fn binom2(k: u64) -> u64 {
    k * k.saturating_sub(1) / 2
}

/// Stationary weight `q^{binom(k,2)} / P_q(n)` of a `k`-dimensional subspace.
pub fn pi_weight(q: u64, n: u64, k: u64) -> Result<BigRational> {
    if k > n {
        return Err(Error::InvalidArgument(format!(
            "subspace dimension {k} exceeds ambient dimension {n}"
        )));
    }
    Ok(BigRational::new(q_pow(q, binom2(k)), pi_normalizer(q, n)))
}
