//! Closed-form eigenvectors for indices with only 0/1 entries, and the
//! membership of the radial vectors in their span.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::cyclotomic::{rational_string, Cyclotomic};
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::linalg::solve_rational;
use crate::operators::FormalVector;
use crate::qarith::q_pow;
use crate::spectra::kq_eigenvector;
use crate::subspaces::{Lattice, DEFAULT_CAP};

use super::{ChainEntry, ChainIndex};

/// All `2^n` indices built from 0 and 1 only, in lexicographic order.
pub fn classical_indices(n: usize) -> Vec<ChainIndex> {
    (0..1usize << n)
        .map(|bits| {
            ChainIndex(
                (0..n)
                    .map(|i| if bits >> (n - 1 - i) & 1 == 1 { ChainEntry::One } else { ChainEntry::Zero })
                    .collect(),
            )
        })
        .collect()
}

fn bits(alpha: &ChainIndex) -> Result<Vec<bool>> {
    alpha
        .entries()
        .iter()
        .map(|e| match e {
            ChainEntry::Zero => Ok(false),
            ChainEntry::One => Ok(true),
            ChainEntry::Char(_) => Err(Error::InvalidArgument(format!("{alpha} has a character entry"))),
        })
        .collect()
}

/// `v_α = sum_X (-1)^{|S(α) ∩ P(X)|} q^{d(α,X)} X`, where `S(α)` is the set of
/// positions holding 1, `P(X)` the pivot rows of `X`, and `d(α,X)` sums, over
/// the non-pivot positions `i`, the number of earlier positions whose entry
/// differs from `α_i`.
pub fn classical_eigenvector(field: &Field, alpha: &ChainIndex) -> Result<FormalVector> {
    let a = bits(alpha)?;
    let n = a.len();
    let d: Vec<u64> = (0..n).map(|i| (0..i).filter(|&j| a[j] != a[i]).count() as u64).collect();
    let p = field.p();
    let lattice = Lattice::new(field, n, DEFAULT_CAP)?;
    let mut v = FormalVector::zero(field.params(), n);
    for x in lattice.subspaces() {
        let piv = x.pivots();
        let sign = piv.iter().filter(|&&r| a[r]).count() % 2;
        let exp: u64 = (0..n).filter(|i| !piv.contains(i)).map(|i| d[i]).sum();
        let mag = q_pow(field.q(), exp);
        let c = if sign == 1 { -mag } else { mag };
        v.add_term(x.clone(), &Cyclotomic::from_integer(p, c))?;
    }
    Ok(v)
}

/// Coefficients expressing radial vectors in the closed-form eigenvectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadialSpan {
    pub indices: Vec<ChainIndex>,
    /// Row `k`: coefficients of `s_k` over `indices`.
    pub radial: Vec<Vec<BigRational>>,
    /// Row `j`: the radial eigenvector `sum_i φ_j(i) s_i` over the indices with `N(α) = j`.
    pub eigen_blocks: Vec<Vec<(ChainIndex, BigRational)>>,
}

impl RadialSpan {
    pub fn to_json(&self) -> Value {
        let names: Vec<String> = self.indices.iter().map(ToString::to_string).collect();
        let radial: Vec<Value> = self
            .radial
            .iter()
            .enumerate()
            .map(|(k, row)| {
                let terms: Vec<Value> = names
                    .iter()
                    .zip(row)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(a, c)| json!({"alpha": a, "coeff": rational_string(c)}))
                    .collect();
                json!({"k": k, "terms": terms})
            })
            .collect();
        let blocks: Vec<Value> = self
            .eigen_blocks
            .iter()
            .enumerate()
            .map(|(j, row)| {
                let terms: Vec<Value> = row
                    .iter()
                    .map(|(a, c)| json!({"alpha": a.to_string(), "coeff": rational_string(c)}))
                    .collect();
                json!({"k": j, "terms": terms})
            })
            .collect();
        json!({"radial": radial, "eigen_blocks": blocks})
    }
}

fn rational_coords(v: &FormalVector, lattice: &Lattice) -> Result<Vec<BigRational>> {
    v.to_coords(lattice)?
        .into_iter()
        .map(|c| c.as_rational().cloned().ok_or_else(|| Error::Invariant("closed-form vector is not rational".into())))
        .collect()
}

/// Solves each `s_k` in the span of the closed-form eigenvectors, and each radial
/// eigenvector in the span of those with matching `N(α)`. `None` if some system
/// is inconsistent.
pub fn radial_in_span(field: &Field, n: usize) -> Result<Option<RadialSpan>> {
    let lattice = Lattice::new(field, n, DEFAULT_CAP)?;
    let indices = classical_indices(n);
    let columns: Vec<Vec<BigRational>> = indices
        .iter()
        .map(|a| rational_coords(&classical_eigenvector(field, a)?, &lattice))
        .collect::<Result<_>>()?;
    let system = |cols: &[usize], rhs: &[BigRational]| {
        let rows: Vec<Vec<BigRational>> =
            (0..lattice.len()).map(|r| cols.iter().map(|&c| columns[c][r].clone()).collect()).collect();
        solve_rational(&rows, rhs)
    };
    let radial_rhs = |k: usize| -> Vec<BigRational> {
        lattice
            .subspaces()
            .iter()
            .map(|x| if x.dim() == k { BigRational::from_integer(BigInt::from(1)) } else { BigRational::zero() })
            .collect()
    };
    let all: Vec<usize> = (0..indices.len()).collect();
    let mut radial = Vec::with_capacity(n + 1);
    for k in 0..=n {
        match system(&all, &radial_rhs(k)) {
            Some(x) => radial.push(x),
            None => return Ok(None),
        }
    }
    let mut eigen_blocks = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let phi = kq_eigenvector(field.q(), n, j);
        let rhs: Vec<BigRational> =
            lattice.subspaces().iter().map(|x| phi[x.dim()].clone()).collect();
        let cols: Vec<usize> = all.iter().copied().filter(|&c| indices[c].weight() == j).collect();
        match system(&cols, &rhs) {
            Some(x) => eigen_blocks.push(cols.iter().map(|&c| indices[c].clone()).zip(x).collect()),
            None => return Ok(None),
        }
    }
    Ok(Some(RadialSpan { indices, radial, eigen_blocks }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigenbasis::build_eigenbasis;
    use crate::operators::{apply_a, radial_vector};
    use crate::subspaces::Subspace;

    fn idx(bits: &[u8]) -> ChainIndex {
        ChainIndex(bits.iter().map(|&b| if b == 1 { ChainEntry::One } else { ChainEntry::Zero }).collect())
    }

    #[test]
    fn closed_form_matches_recursion() {
        for (q, n) in [(2u64, 3usize), (3, 2), (2, 2), (4, 2)] {
            let b = build_eigenbasis(q, n, DEFAULT_CAP).unwrap();
            let f = b.field().clone();
            for a in classical_indices(n) {
                let closed = classical_eigenvector(&f, &a).unwrap();
                assert_eq!(&closed, &b.get(n, &a).unwrap().vector, "q={q} alpha={a}");
            }
        }
    }

    #[test]
    fn boundary_values() {
        let f = Field::new(2).unwrap();
        let v = classical_eigenvector(&f, &idx(&[1, 0])).unwrap();
        assert_eq!(v.get(&Subspace::zero(2)), Cyclotomic::from_integer(2, 2));
        assert_eq!(v.get(&Subspace::full(2)), Cyclotomic::from_integer(2, -1));
        let all_zero = classical_eigenvector(&f, &idx(&[0, 0, 0])).unwrap();
        assert!(all_zero.iter().all(|(_, c)| c.is_one()));
        assert_eq!(all_zero.support_len(), 16);
        for (q, n) in [(3u64, 3usize), (2, 4), (5, 2)] {
            let f = Field::new(q).unwrap();
            for a in classical_indices(n) {
                let k = a.weight();
                let v = classical_eigenvector(&f, &a).unwrap();
                assert_eq!(v.get(&Subspace::zero(n)), Cyclotomic::from_integer(f.p(), q_pow(q, (k * (n - k)) as u64)));
                let sign = if k % 2 == 0 { 1 } else { -1 };
                assert_eq!(v.get(&Subspace::full(n)), Cyclotomic::from_integer(f.p(), sign));
                let lam = crate::spectra::eigenvalue(q, n, k);
                assert_eq!(apply_a(&f, &v).unwrap(), v.scale_int(&lam));
            }
        }
        assert!(classical_eigenvector(&f, &ChainIndex(vec![ChainEntry::Char(super::super::Character::new(vec![
            crate::gf::FieldElem::ONE
        ]))]))
        .is_err());
    }

    #[test]
    fn radial_vectors_in_span() {
        let f = Field::new(5).unwrap();
        let span = radial_in_span(&f, 1).unwrap().unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(span.radial[0], vec![half.clone(), half]);
        for (q, n) in [(2u64, 2usize), (2, 3), (3, 2)] {
            let f = Field::new(q).unwrap();
            let span = radial_in_span(&f, n).unwrap().unwrap();
            // recombine and compare against s_k
            for k in 0..=n {
                let mut acc = FormalVector::zero(f.params(), n);
                for (a, c) in span.indices.iter().zip(&span.radial[k]) {
                    acc = acc.checked_add(&classical_eigenvector(&f, a).unwrap().scale_rational(c)).unwrap();
                }
                assert_eq!(acc, radial_vector(&f, n, k).unwrap());
            }
            for (j, block) in span.eigen_blocks.iter().enumerate() {
                assert!(block.iter().all(|(a, _)| a.weight() == j));
            }
            let json = span.to_json();
            assert_eq!(json["radial"].as_array().unwrap().len(), n + 1);
        }
    }
}
