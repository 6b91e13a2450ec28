//! Eigenvalues and multiplicities of `M_q(n)`, the q-Kac eigenvectors as
//! terminating basic hypergeometric sums, and exact verification of both.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::linalg::{charpoly, IntPoly};
use crate::operators::{build_kq, build_mq};
use crate::qarith::{galois_number, q_binomial, q_int, q_pochhammer, q_pow};
use crate::subspaces::Lattice;

/// Largest matrix dimension for characteristic polynomials, dense
/// determinants and minors.
pub const DENSE_CAP: u128 = 400;

/// `(n-k)_q - (k)_q`.
pub fn eigenvalue(q: u64, n: usize, k: usize) -> BigInt {
    q_int(q, (n - k) as u64) - q_int(q, k as u64)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumPair {
    pub k: usize,
    pub lambda: BigInt,
    pub mult: BigInt,
}

impl Serialize for SpectrumPair {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SpectrumPair", 3)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("lambda", &self.lambda.to_string())?;
        st.serialize_field("mult", &self.mult.to_string())?;
        st.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub q: u64,
    pub n: usize,
    pub pairs: Vec<SpectrumPair>,
    /// Set once the characteristic polynomial has been checked against `pairs`.
    pub charpoly_verified: bool,
}

impl SpectrumReport {
    pub fn total_multiplicity(&self) -> BigInt {
        self.pairs.iter().map(|p| &p.mult).sum()
    }

    /// `prod (x - λ_k)^{mult_k}`.
    pub fn expected_charpoly(&self) -> Result<IntPoly> {
        let roots: Vec<(BigInt, u64)> = self
            .pairs
            .iter()
            .map(|p| {
                u64::try_from(&p.mult)
                    .map(|m| (p.lambda.clone(), m))
                    .map_err(|_| Error::InvalidArgument("multiplicity too large".into()))
            })
            .collect::<Result<_>>()?;
        Ok(IntPoly::from_roots(roots.iter().map(|(r, m)| (r, *m))))
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,lambda,mult\n");
        for p in &self.pairs {
            out.push_str(&format!("{},{},{}\n", p.k, p.lambda, p.mult));
        }
        out
    }
}

/// The closed-form eigenvalue list of `M_q(n)`.
pub fn spectrum(q: u64, n: usize) -> SpectrumReport {
    let pairs = (0..=n)
        .map(|k| SpectrumPair { k, lambda: eigenvalue(q, n, k), mult: q_binomial(q, n as i64, k as i64) })
        .collect();
    SpectrumReport { q, n, pairs, charpoly_verified: false }
}

fn check_dense_cap(q: u64, n: usize) -> Result<()> {
    let g = galois_number(q, n as u64);
    if g > BigInt::from(DENSE_CAP) {
        let size = u128::try_from(&g).unwrap_or(u128::MAX);
        return Err(Error::CapExceeded { what: "characteristic polynomial dimension", size, cap: DENSE_CAP });
    }
    Ok(())
}

/// True iff `det(xI - M_q(n))` equals the product over the closed-form spectrum.
pub fn verify_spectrum_charpoly(q: u64, n: usize) -> Result<bool> {
    verify_spectrum_charpoly_in(&Field::new(q)?, n)
}

/// As [`verify_spectrum_charpoly`], over a field with a chosen modulus.
pub fn verify_spectrum_charpoly_in(field: &Field, n: usize) -> Result<bool> {
    let q = field.q();
    check_dense_cap(q, n)?;
    let lattice = Lattice::new(field, n, DENSE_CAP)?;
    let m = build_mq(&lattice);
    Ok(charpoly(&m) == spectrum(q, n).expected_charpoly()?)
}

/// Component `i` of the `k`-th q-Kac eigenvector: the terminating sum
/// `sum_j (q^{-i};q)_j (q^{-k};q)_j (-q^{k-n};q)_j / ((q;q)_j (q^{-n};q)_j) q^j`.
pub fn phi32_component(q: u64, n: usize, k: usize, i: usize) -> BigRational {
    let qr = BigRational::from_integer(q.into());
    let qpow = |e: i64| -> BigRational {
        let base = BigRational::from_integer(q_pow(q, e.unsigned_abs()));
        if e >= 0 {
            base
        } else {
            base.recip()
        }
    };
    let a = qpow(-(i as i64));
    let b = qpow(-(k as i64));
    let c = -qpow(k as i64 - n as i64);
    let d = qpow(-(n as i64));
    let mut sum = BigRational::zero();
    for j in 0..=i.min(k) as u64 {
        let num = q_pochhammer(&a, &qr, j) * q_pochhammer(&b, &qr, j) * q_pochhammer(&c, &qr, j);
        if num.is_zero() {
            continue;
        }
        let den = q_pochhammer(&qr, &qr, j) * q_pochhammer(&d, &qr, j);
        sum += num / den * qpow(j as i64);
    }
    sum
}

pub fn kq_eigenvector(q: u64, n: usize, k: usize) -> Vec<BigRational> {
    (0..=n).map(|i| phi32_component(q, n, k, i)).collect()
}

/// True iff `K_q(n) v = λ_k v` exactly for the hypergeometric vector `v`.
pub fn kq_residual_is_zero(q: u64, n: usize, k: usize) -> bool {
    let v = kq_eigenvector(q, n, k);
    let lam = BigRational::from_integer(eigenvalue(q, n, k));
    let kv = build_kq(q, n).mul_vec_rational(&v);
    kv.iter().zip(&v).all(|(a, b)| *a == &lam * b)
}

/// Reassembles the spectrum from scaled q-Kac blocks: for each `k <= n/2`
/// the eigenvalues of `q^k K_q(n-2k)`, each with multiplicity
/// `[n,k]_q - [n,k-1]_q`, must reproduce the closed-form multiset.
pub fn blocked_spectrum_check(q: u64, n: usize) -> bool {
    let mut assembled: BTreeMap<BigInt, BigInt> = BTreeMap::new();
    for k in 0..=n / 2 {
        let m = q_binomial(q, n as i64, k as i64) - q_binomial(q, n as i64, k as i64 - 1);
        let scale = q_pow(q, k as u64);
        let block = n - 2 * k;
        for j in 0..=block {
            *assembled.entry(&scale * eigenvalue(q, block, j)).or_default() += &m;
        }
    }
    assembled.retain(|_, m| !m.is_zero());
    let expected: BTreeMap<BigInt, BigInt> = spectrum(q, n).pairs.into_iter().map(|p| (p.lambda, p.mult)).collect();
    assembled == expected
}

/// Multiplicities always sum to the number of subspaces.
pub fn multiplicities_sum_to_galois(q: u64, n: usize) -> bool {
    spectrum(q, n).total_multiplicity() == galois_number(q, n as u64)
}
