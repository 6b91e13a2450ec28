//! The canonical eigenbasis of `A_q(n)`, built level by level.
//!
//! Level `m + 1` is assembled from level `m` by the two lifts
//! `q^k v + θ_m(v)` and `q^{m-k} v - θ_m(v)`, and from level `m - 1` by
//! transporting each vector into `W(χ)` through `λ(χ) μ(X(χ))` for every
//! nontrivial character `χ` of `H(m+1)`. Vectors are never normalized.

mod characters;
mod classical;
mod laws;

pub use characters::{
    characters, group_element, hat_of, lambda_chi, mu, mu_inverse_subspace, mu_subspace,
    nontrivial_characters, nonzero_projection_counts, p_chi, tau, theta, theta_preimage,
    trivial_on_stabilizer, x_of_chi, Character,
};
pub use classical::{classical_eigenvector, classical_indices, radial_in_span, RadialSpan};
pub use laws::{
    a_prime_matches_scaled_mq, a_prime_on_lift, basis_matches_spectrum, conjugate_flip_holds,
    coordinate_laws_hold, eigen_residuals_vanish, embedding_identity_holds, lift_identity_holds,
    norm_recursions_hold, structural_identities_on_basis, verify_orthogonality, w_dimension_law_holds,
};

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::operators::{inner_product_pi, FormalVector};
use crate::par::Exec;
use crate::qarith::q_pow;
use crate::spectra::eigenvalue;
use crate::subspaces::{check_cap, Lattice, Subspace};

/// One entry of a chain index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ChainEntry {
    Zero,
    One,
    /// A nontrivial character of `H(m+1)`, `m = chi.level()`.
    Char(Character),
}

/// An element of the index set `E_q(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ChainIndex(pub Vec<ChainEntry>);

impl ChainIndex {
    pub fn entries(&self) -> &[ChainEntry] {
        &self.0
    }

    /// `N(α)`, the number of nonzero entries.
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|e| **e != ChainEntry::Zero).count()
    }

    /// The ambient dimension `n` with `α ∈ E_q(n)`: characters take two levels.
    pub fn level(&self) -> usize {
        self.0.iter().map(|e| if matches!(e, ChainEntry::Char(_)) { 2 } else { 1 }).sum()
    }

    pub fn is_classical(&self) -> bool {
        self.0.iter().all(|e| !matches!(e, ChainEntry::Char(_)))
    }

    /// `ᾱ`: zeros and ones swapped, characters untouched.
    pub fn conjugate(&self) -> ChainIndex {
        ChainIndex(
            self.0
                .iter()
                .map(|e| match e {
                    ChainEntry::Zero => ChainEntry::One,
                    ChainEntry::One => ChainEntry::Zero,
                    c => c.clone(),
                })
                .collect(),
        )
    }

    pub fn push(&self, e: ChainEntry) -> ChainIndex {
        let mut v = self.0.clone();
        v.push(e);
        ChainIndex(v)
    }

    /// The index with its last entry removed.
    pub fn parent(&self) -> Option<(ChainIndex, &ChainEntry)> {
        let (last, rest) = self.0.split_last()?;
        Some((ChainIndex(rest.to_vec()), last))
    }

    pub fn to_json(&self, field: &Field) -> Value {
        Value::Array(
            self.0
                .iter()
                .map(|e| match e {
                    ChainEntry::Zero => json!(0),
                    ChainEntry::One => json!(1),
                    ChainEntry::Char(c) => c.to_json(field),
                })
                .collect(),
        )
    }
}

impl fmt::Display for ChainIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            match e {
                ChainEntry::Zero => write!(f, "0")?,
                ChainEntry::One => write!(f, "1")?,
                ChainEntry::Char(c) => {
                    let codes: Vec<String> = c.label().iter().map(|x| x.code().to_string()).collect();
                    write!(f, "χ[{}]", codes.join(" "))?
                }
            }
        }
        write!(f, ")")
    }
}

/// `E_q(0..=n)` by the recursion `E(m) = E(m-1)×{0,1} ∪ E(m-2)×N_q(m-1)`.
pub fn enumerate_levels(field: &Field, n: usize) -> Vec<Vec<ChainIndex>> {
    let mut levels: Vec<Vec<ChainIndex>> = vec![vec![ChainIndex::default()]];
    for m in 1..=n {
        let mut cur = Vec::new();
        for b in &levels[m - 1] {
            cur.push(b.push(ChainEntry::Zero));
            cur.push(b.push(ChainEntry::One));
        }
        if m >= 2 {
            for chi in nontrivial_characters(field, m - 1) {
                for b in &levels[m - 2] {
                    cur.push(b.push(ChainEntry::Char(chi.clone())));
                }
            }
        }
        levels.push(cur);
    }
    levels
}

/// `E_q(n)` grouped by `N(α)`.
pub fn enumerate_e(field: &Field, n: usize) -> Vec<ChainIndex> {
    let mut out = enumerate_levels(field, n).pop().expect("level n exists");
    out.sort_by_key(ChainIndex::weight);
    out
}

/// `v_α` together with its index and eigenvalue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenVector {
    pub alpha: ChainIndex,
    pub lambda: BigInt,
    pub vector: FormalVector,
}

impl EigenVector {
    pub fn k(&self) -> usize {
        self.alpha.weight()
    }

    pub fn norm_sq(&self) -> Result<Cyclotomic> {
        inner_product_pi(&self.vector, &self.vector)
    }
}

/// The eigenbases of every level `0..=n`.
#[derive(Debug, Clone)]
pub struct EigenBasis {
    field: Field,
    levels: Vec<Vec<EigenVector>>,
    index: Vec<HashMap<ChainIndex, usize>>,
}

impl EigenBasis {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn q(&self) -> u64 {
        self.field.q()
    }

    pub fn n(&self) -> usize {
        self.levels.len() - 1
    }

    /// The basis of `C[B_q(n)]`.
    pub fn vectors(&self) -> &[EigenVector] {
        self.level(self.n())
    }

    pub fn level(&self, m: usize) -> &[EigenVector] {
        &self.levels[m]
    }

    pub fn len(&self) -> usize {
        self.vectors().len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors().is_empty()
    }

    pub fn get(&self, m: usize, alpha: &ChainIndex) -> Option<&EigenVector> {
        self.index.get(m)?.get(alpha).map(|&i| &self.levels[m][i])
    }

    /// Per-vector records with coordinates indexed by the lattice order.
    pub fn to_json(&self, lattice: &Lattice) -> Result<Value> {
        let field = &self.field;
        let records = self
            .vectors()
            .iter()
            .map(|ev| {
                let coords: Vec<Value> = ev
                    .vector
                    .iter()
                    .map(|(x, c)| {
                        let i = lattice.index_of(x).ok_or_else(|| Error::AmbientMismatch(x.ambient(), lattice.n()))?;
                        Ok(json!({"subspace_index": i, "value": c}))
                    })
                    .collect::<Result<_>>()?;
                Ok(json!({
                    "alpha": ev.alpha.to_json(field),
                    "k": ev.k(),
                    "lambda": ev.lambda.to_string(),
                    "coords": coords,
                    "norm_sq": ev.norm_sq()?,
                }))
            })
            .collect::<Result<Vec<Value>>>()?;
        Ok(Value::Array(records))
    }
}

fn lift_pair(field: &Field, m: usize, beta: &EigenVector) -> Result<[EigenVector; 2]> {
    let k = beta.k();
    let v = beta.vector.embed();
    let t = theta(field, &beta.vector)?;
    let a = v.scale_int(&q_pow(field.q(), k as u64)).checked_add(&t)?;
    let b = v.scale_int(&q_pow(field.q(), (m - k) as u64)).checked_sub(&t)?;
    Ok([
        EigenVector { alpha: beta.alpha.push(ChainEntry::Zero), lambda: eigenvalue(field.q(), m + 1, k), vector: a },
        EigenVector { alpha: beta.alpha.push(ChainEntry::One), lambda: eigenvalue(field.q(), m + 1, k + 1), vector: b },
    ])
}

/// Builds `v_α` for every `α ∈ E_q(m)`, `m ≤ n`.
pub fn build_eigenbasis(q: u64, n: usize, cap: u128) -> Result<EigenBasis> {
    let field = Field::new(q)?;
    build_eigenbasis_with(&field, n, cap, Exec::default())
}

pub fn build_eigenbasis_with(field: &Field, n: usize, cap: u128, exec: Exec) -> Result<EigenBasis> {
    check_cap(field.q(), n, cap)?;
    let q = field.q();
    let root = EigenVector {
        alpha: ChainIndex::default(),
        lambda: BigInt::from(0),
        vector: FormalVector::delta(field.params(), Subspace::zero(0)),
    };
    let mut levels: Vec<Vec<EigenVector>> = vec![vec![root]];
    for m in 0..n {
        let lifted: Vec<[EigenVector; 2]> = exec
            .map(&levels[m], |beta| lift_pair(field, m, beta))
            .into_iter()
            .collect::<Result<_>>()?;
        let mut cur: Vec<EigenVector> = lifted.into_iter().flatten().collect();
        if m >= 1 {
            let chars = nontrivial_characters(field, m);
            let prev = &levels[m - 1];
            let transported: Vec<Vec<EigenVector>> = exec
                .map(&chars, |chi| {
                    let x = x_of_chi(field, chi)?;
                    prev.iter()
                        .map(|beta| {
                            let vector = lambda_chi(field, chi, &x, &mu(field, &x, &beta.vector)?)?;
                            Ok(EigenVector {
                                alpha: beta.alpha.push(ChainEntry::Char(chi.clone())),
                                lambda: eigenvalue(q, m + 1, beta.k() + 1),
                                vector,
                            })
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .into_iter()
                .collect::<Result<_>>()?;
            cur.extend(transported.into_iter().flatten());
        }
        levels.push(cur);
    }
    let index = levels
        .iter()
        .map(|lv| lv.iter().enumerate().map(|(i, ev)| (ev.alpha.clone(), i)).collect())
        .collect();
    Ok(EigenBasis { field: field.clone(), levels, index })
}
