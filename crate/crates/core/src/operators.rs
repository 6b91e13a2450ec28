//! Operators on the formal span `C[B_q(n)]`: the up/down operators, the
//! q-cube operator `A = U + sum_k q^{k-1} D_k` (whose matrix is `M_q(n)`),
//! the q-Kac matrix, radial vectors and the π-weighted inner product.

use std::collections::btree_map::{self, BTreeMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::linalg::IntMatrix;
use crate::par::Exec;
use crate::qarith::{pi_weight, q_int, q_pow, QParams};
use crate::subspaces::{down_covers, enumerate_subspaces, up_covers, Lattice, Subspace};

/// A finitely supported formal combination of subspaces with cyclotomic
/// coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalVector {
    params: QParams,
    n: usize,
    coeffs: BTreeMap<Subspace, Cyclotomic>,
}

impl FormalVector {
    pub fn zero(params: QParams, n: usize) -> Self {
        FormalVector { params, n, coeffs: BTreeMap::new() }
    }

    pub fn delta(params: QParams, x: Subspace) -> Self {
        let mut v = Self::zero(params, x.ambient());
        let one = Cyclotomic::one(params.p as u32);
        v.coeffs.insert(x, one);
        v
    }

    pub fn params(&self) -> QParams {
        self.params
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> u32 {
        self.params.p as u32
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Subspace, Cyclotomic> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Subspace> {
        self.coeffs.keys()
    }

    pub fn get(&self, x: &Subspace) -> Cyclotomic {
        self.coeffs.get(x).cloned().unwrap_or_else(|| Cyclotomic::zero(self.p()))
    }

    /// Adds `c · x`, dropping the entry if it cancels.
    pub fn add_term(&mut self, x: Subspace, c: &Cyclotomic) -> Result<()> {
        if x.ambient() != self.n {
            return Err(Error::AmbientMismatch(x.ambient(), self.n));
        }
        if c.is_zero() {
            return Ok(());
        }
        match self.coeffs.entry(x) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            btree_map::Entry::Occupied(mut e) => {
                let s = e.get().checked_add(c)?;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
        Ok(())
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch(self.n, other.n));
        }
        if self.params != other.params {
            return Err(Error::InvalidArgument(format!(
                "vectors over different fields (q = {} vs {})",
                self.params.q, other.params.q
            )));
        }
        Ok(())
    }

    /// `self + c · other`.
    pub fn add_scaled(&self, other: &Self, c: &Cyclotomic) -> Result<Self> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (x, v) in other.iter() {
            out.add_term(x.clone(), &(v * c))?;
        }
        Ok(out)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.add_scaled(other, &Cyclotomic::one(self.p()))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.add_scaled(other, &Cyclotomic::from_integer(self.p(), -1))
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        let mut out = Self::zero(self.params, self.n);
        if c.is_zero() {
            return out;
        }
        out.coeffs = self.coeffs.iter().map(|(x, v)| (x.clone(), v * c)).collect();
        out
    }

    pub fn scale_rational(&self, r: &BigRational) -> Self {
        self.scale(&Cyclotomic::from_rational(self.p(), r.clone()))
    }

    pub fn scale_int(&self, n: &BigInt) -> Self {
        self.scale_rational(&BigRational::from_integer(n.clone()))
    }

    /// The same vector inside `C[B_q(n+1)]`.
    pub fn embed(&self) -> Self {
        FormalVector {
            params: self.params,
            n: self.n + 1,
            coeffs: self.coeffs.iter().map(|(x, c)| (x.embed(), c.clone())).collect(),
        }
    }

    /// Coordinates in the lattice's canonical order.
    pub fn to_coords(&self, lattice: &Lattice) -> Result<Vec<Cyclotomic>> {
        if lattice.n() != self.n {
            return Err(Error::AmbientMismatch(self.n, lattice.n()));
        }
        let mut out = vec![Cyclotomic::zero(self.p()); lattice.len()];
        for (x, c) in self.iter() {
            out[lattice.index_of(x).expect("lattice contains every subspace")] = c.clone();
        }
        Ok(out)
    }

    pub fn from_coords(params: QParams, lattice: &Lattice, coords: &[Cyclotomic]) -> Result<Self> {
        let mut v = Self::zero(params, lattice.n());
        for (x, c) in lattice.subspaces().iter().zip(coords) {
            v.add_term(x.clone(), c)?;
        }
        Ok(v)
    }
}

fn check_field(field: &Field, v: &FormalVector) -> Result<()> {
    if field.params() != v.params {
        return Err(Error::InvalidArgument("vector and field disagree on q".into()));
    }
    Ok(())
}

/// The up operator: each subspace goes to the sum of its covers.
pub fn up(field: &Field, v: &FormalVector) -> Result<FormalVector> {
    check_field(field, v)?;
    let mut out = FormalVector::zero(v.params, v.n);
    for (x, c) in v.iter() {
        for y in up_covers(field, x) {
            out.add_term(y, c)?;
        }
    }
    Ok(out)
}

/// The down operator: each subspace goes to the sum of the subspaces it covers.
pub fn down(field: &Field, v: &FormalVector) -> Result<FormalVector> {
    check_field(field, v)?;
    let mut out = FormalVector::zero(v.params, v.n);
    for (x, c) in v.iter() {
        for z in down_covers(field, x) {
            out.add_term(z, c)?;
        }
    }
    Ok(out)
}

/// Matrix-free application of `A_q(n) = U_n + sum_k q^{k-1} D_{n,k}`.
pub fn apply_a(field: &Field, v: &FormalVector) -> Result<FormalVector> {
    check_field(field, v)?;
    let p = v.p();
    let q = field.q();
    let mut out = FormalVector::zero(v.params, v.n);
    for (x, c) in v.iter() {
        for y in up_covers(field, x) {
            out.add_term(y, c)?;
        }
        let k = x.dim();
        if k == 0 {
            // D_{n,0} = 0; the weight q^{-1} never appears
            continue;
        }
        let w = c * &Cyclotomic::from_integer(p, q_pow(q, (k - 1) as u64));
        for z in down_covers(field, x) {
            out.add_term(z, &w)?;
        }
    }
    Ok(out)
}

/// `s_k`, the sum of all `k`-dimensional subspaces.
pub fn radial_vector(field: &Field, n: usize, k: usize) -> Result<FormalVector> {
    if k > n {
        return Err(Error::InvalidArgument(format!("rank {k} exceeds ambient dimension {n}")));
    }
    let one = Cyclotomic::one(field.p());
    let mut v = FormalVector::zero(field.params(), n);
    for x in enumerate_subspaces(field, n, k) {
        v.add_term(x, &one)?;
    }
    Ok(v)
}

/// `<u, v>_π = sum_X conj(u(X)) v(X) π(X)`.
pub fn inner_product_pi(u: &FormalVector, v: &FormalVector) -> Result<Cyclotomic> {
    u.compatible(v)?;
    let q = u.params.q;
    let n = u.n as u64;
    let weights: Vec<BigRational> =
        (0..=n).map(|k| pi_weight(q, n, k)).collect::<Result<_>>()?;
    let mut acc = Cyclotomic::zero(u.p());
    // iterate the smaller support
    let (small, large, flip) = if u.support_len() <= v.support_len() { (u, v, false) } else { (v, u, true) };
    for (x, a) in small.iter() {
        if let Some(b) = large.coeffs.get(x) {
            let term = if flip { &b.conj() * a } else { &a.conj() * b };
            acc = &acc + &term.scale(&weights[x.dim()]);
        }
    }
    Ok(acc)
}

/// `M_q(n)`: row `X` has 1 at every subspace covered by `X` and `q^{dim X}` at every cover of `X`.
pub fn build_mq(lattice: &Lattice) -> IntMatrix {
    build_mq_with(lattice, Exec::default())
}

pub fn build_mq_with(lattice: &Lattice, exec: Exec) -> IntMatrix {
    let field = lattice.field();
    let rows: Vec<Vec<(usize, usize, BigInt)>> = exec.map_range(lattice.len(), |i| {
        let x = lattice.get(i);
        let up_weight = q_pow(field.q(), x.dim() as u64);
        let idx = |s: &Subspace| lattice.index_of(s).expect("cover lies in lattice");
        down_covers(field, x)
            .iter()
            .map(|z| (i, idx(z), BigInt::one()))
            .chain(up_covers(field, x).iter().map(|y| (i, idx(y), up_weight.clone())))
            .collect()
    });
    IntMatrix::from_triples(lattice.len(), rows.into_iter().flatten())
}

/// The q-Kac matrix: column `k` is `(k+1)_q c_{k+1} + q^{k-1}(n-k+1)_q c_{k-1}`.
pub fn build_kq(q: u64, n: usize) -> IntMatrix {
    let mut triples = Vec::new();
    for k in 0..=n {
        if k < n {
            triples.push((k + 1, k, q_int(q, (k + 1) as u64)));
        }
        if k > 0 {
            triples.push((k - 1, k, q_pow(q, (k - 1) as u64) * q_int(q, (n - k + 1) as u64)));
        }
    }
    IntMatrix::from_triples(n + 1, triples)
}

/// Matrix Market text for a lattice-indexed matrix, plus the JSON index
/// mapping each 1-based row/column to its subspace.
pub fn matrix_market_with_index(lattice: &Lattice, m: &IntMatrix) -> (String, serde_json::Value) {
    let field = lattice.field();
    let entries: Vec<serde_json::Value> = lattice
        .subspaces()
        .iter()
        .enumerate()
        .map(|(i, x)| serde_json::json!({"index": i + 1, "subspace": x.to_json(field)}))
        .collect();
    let index = serde_json::json!({"q": field.q(), "n": lattice.n(), "modulus": field.modulus(), "rows": entries});
    (m.to_matrix_market(), index)
}

/// Exact detailed balance `π(X) M(X,Y) = π(Y) M(Y,X)` over every nonzero entry.
pub fn detailed_balance_holds(lattice: &Lattice, m: &IntMatrix) -> bool {
    let q = lattice.field().q();
    let n = lattice.n() as u64;
    let pi: Vec<BigRational> = (0..=n).map(|k| pi_weight(q, n, k).unwrap()).collect();
    (0..m.dim()).all(|i| {
        m.row(i).iter().all(|(j, v)| {
            let wi = &pi[lattice.get(i).dim()];
            let wj = &pi[lattice.get(*j).dim()];
            wi * BigRational::from_integer(v.clone()) == wj * BigRational::from_integer(m.get(*j, i))
        })
    })
}
