//! The lattice `B_q(n)` of subspaces of `F_q^n`.
//!
//! Every subspace is held in Schubert normal form (column-reduced echelon
//! form): column `j` ends in a 1 at its pivot row `r_j`, the pivots strictly
//! increase, and the pivot rows form an identity block. Pivots are 0-based in
//! code and 1-based in JSON.
//!
//! Subspaces sort by `(k, pivot set, column-major entries)`, which is the
//! canonical row/column order of every matrix this crate emits. The
//! distinguished hyperplane `F_q^{n-1}` is always "last coordinate zero".

use std::collections::HashMap;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::gf::{odometer, FfVector, Field, FieldElem, GfMatrix};
use crate::qarith::galois_number;

/// Default refusal threshold on `G_q(n)` for full enumerations.
pub const DEFAULT_CAP: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    n: usize,
    k: usize,
    pivots: Vec<usize>,
    cols: Vec<FfVector>,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace { n, k: 0, pivots: Vec::new(), cols: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        let cols = (0..n).map(|j| unit(n, j)).collect();
        Subspace { n, k: n, pivots: (0..n).collect(), cols }
    }

    /// `span{e_i}` (0-based `i`).
    pub fn axis(n: usize, i: usize) -> Self {
        Subspace { n, k: 1, pivots: vec![i], cols: vec![unit(n, i)] }
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    /// Pivot rows, 0-based and increasing.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The Schubert normal form columns.
    pub fn columns(&self) -> &[FfVector] {
        &self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.k == 0
    }

    /// Whether `v` lies in the column space.
    pub fn contains_vector(&self, field: &Field, v: &[FieldElem]) -> bool {
        debug_assert_eq!(v.len(), self.n);
        self.reduce(field, v).iter().all(|x| x.is_zero())
    }

    /// `v` minus its component along the pivot columns; zero on every pivot row.
    pub fn reduce(&self, field: &Field, v: &[FieldElem]) -> FfVector {
        let mut w = v.to_vec();
        for (col, &r) in self.cols.iter().zip(&self.pivots) {
            let c = field.neg(w[r]);
            field.axpy(&mut w, c, col);
        }
        w
    }

    pub fn contains(&self, field: &Field, other: &Subspace) -> bool {
        self.n == other.n
            && other.k <= self.k
            && other.cols.iter().all(|c| self.contains_vector(field, c))
    }

    /// Whether the subspace leaves the distinguished hyperplane (`A_q(n)` membership).
    pub fn in_a(&self) -> bool {
        self.n > 0 && self.pivots.last() == Some(&(self.n - 1))
    }

    /// Intersection with the hyperplane `x_n = 0`, re-ambiented in `F_q^{n-1}`.
    pub fn restrict_to_hyperplane(&self) -> Subspace {
        assert!(self.n > 0, "cannot restrict a subspace of F_q^0");
        let keep = if self.in_a() { self.k - 1 } else { self.k };
        Subspace {
            n: self.n - 1,
            k: keep,
            pivots: self.pivots[..keep].to_vec(),
            cols: self.cols[..keep].iter().map(|c| c[..self.n - 1].to_vec()).collect(),
        }
    }

    /// The same subspace viewed inside `F_q^{n+1}`.
    pub fn embed(&self) -> Subspace {
        Subspace {
            n: self.n + 1,
            k: self.k,
            pivots: self.pivots.clone(),
            cols: self
                .cols
                .iter()
                .map(|c| {
                    let mut c = c.clone();
                    c.push(FieldElem::ZERO);
                    c
                })
                .collect(),
        }
    }

    /// `span(X, e_n)` for `X` inside the hyperplane of its ambient space.
    pub fn hat(&self) -> Result<Subspace> {
        if self.n == 0 || self.in_a() {
            return Err(Error::InvalidArgument(
                "hat requires a subspace of the distinguished hyperplane".into(),
            ));
        }
        let mut out = self.clone();
        out.k += 1;
        out.pivots.push(self.n - 1);
        out.cols.push(unit(self.n, self.n - 1));
        Ok(out)
    }

    /// Coset representatives of `F_q^n / X`: the vectors vanishing on every pivot row.
    pub fn coset_representatives(&self, field: &Field) -> Vec<FfVector> {
        let free: Vec<usize> = (0..self.n).filter(|i| !self.pivots.contains(i)).collect();
        let mut out = Vec::new();
        let mut digits = vec![FieldElem::ZERO; free.len()];
        loop {
            let mut v = vec![FieldElem::ZERO; self.n];
            for (&i, &d) in free.iter().zip(&digits) {
                v[i] = d;
            }
            out.push(v);
            if !odometer(&mut digits, field.q() as u32) {
                return out;
            }
        }
    }

    /// JSON rendering with 1-based pivots and field elements as coefficient lists.
    pub fn to_json(&self, field: &Field) -> Value {
        let cols: Vec<Vec<Vec<u32>>> = self
            .cols
            .iter()
            .map(|c| c.iter().map(|&x| field.coefficients(x)).collect())
            .collect();
        let pivots: Vec<usize> = self.pivots.iter().map(|r| r + 1).collect();
        json!({"n": self.n, "k": self.k, "pivots": pivots, "cols": cols})
    }
}

fn unit(n: usize, i: usize) -> FfVector {
    let mut v = vec![FieldElem::ZERO; n];
    v[i] = FieldElem::ONE;
    v
}

/// Schubert normal form of the span of `vectors` inside `F_q^n`.
pub fn canonicalize(field: &Field, vectors: &[FfVector], n: usize) -> Result<Subspace> {
    if let Some(v) = vectors.iter().find(|v| v.len() != n) {
        return Err(Error::AmbientMismatch(v.len(), n));
    }
    let mut work: Vec<FfVector> = vectors.to_vec();
    let mut assigned: Vec<Option<usize>> = vec![None; work.len()];
    let mut by_row: Vec<(usize, usize)> = Vec::new();
    for row in (0..n).rev() {
        let Some(idx) = (0..work.len()).find(|&i| assigned[i].is_none() && !work[i][row].is_zero())
        else {
            continue;
        };
        let inv = field.inv(work[idx][row])?;
        work[idx] = field.scale_vec(inv, &work[idx]);
        assigned[idx] = Some(row);
        let pivot = work[idx].clone();
        for (i, w) in work.iter_mut().enumerate() {
            if i != idx && !w[row].is_zero() {
                let c = field.neg(w[row]);
                field.axpy(w, c, &pivot);
            }
        }
        by_row.push((row, idx));
    }
    by_row.sort_unstable();
    let pivots = by_row.iter().map(|&(r, _)| r).collect();
    let cols = by_row.iter().map(|&(_, i)| work[i].clone()).collect();
    Ok(Subspace { n, k: by_row.len(), pivots, cols })
}

/// True iff `y` is a hyperplane of `x`.
pub fn covers(field: &Field, x: &Subspace, y: &Subspace) -> bool {
    x.n == y.n && x.k == y.k + 1 && x.contains(field, y)
}

/// Subspaces covering `x`, one per point of the projective quotient `F_q^n / x`.
pub fn up_covers(field: &Field, x: &Subspace) -> Vec<Subspace> {
    x.coset_representatives(field)
        .into_iter()
        .filter(|v| v.iter().rev().find(|c| !c.is_zero()) == Some(&FieldElem::ONE))
        .map(|v| {
            let mut vs = x.cols.clone();
            vs.push(v);
            canonicalize(field, &vs, x.n).expect("same ambient")
        })
        .collect()
}

/// Subspaces covered by `x`: kernels of the nonzero functionals on `x`, up to scaling.
pub fn down_covers(field: &Field, x: &Subspace) -> Vec<Subspace> {
    let k = x.k;
    if k == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut phi = vec![FieldElem::ZERO; k];
    while odometer(&mut phi, field.q() as u32) {
        let t = phi.iter().rposition(|c| !c.is_zero()).unwrap();
        if phi[t] != FieldElem::ONE {
            continue;
        }
        let basis: Vec<FfVector> = (0..k)
            .filter(|&j| j != t)
            .map(|j| {
                let mut v = x.cols[j].clone();
                field.axpy(&mut v, field.neg(phi[j]), &x.cols[t]);
                v
            })
            .collect();
        out.push(canonicalize(field, &basis, x.n).expect("same ambient"));
    }
    out
}

/// All `Y` in `A_q(n+1)` with `Y ∩ F_q^n = x`, i.e. `span(x, e_{n+1} + u)` over coset representatives `u`.
pub fn lifts_over(field: &Field, x: &Subspace) -> Vec<Subspace> {
    let base = x.embed();
    x.coset_representatives(field)
        .into_iter()
        .map(|mut u| {
            u.push(FieldElem::ONE);
            let mut vs = base.cols.clone();
            vs.push(u);
            canonicalize(field, &vs, x.n + 1).expect("same ambient")
        })
        .collect()
}

/// `g · x` for an invertible `g`.
pub fn act(field: &Field, g: &GfMatrix, x: &Subspace) -> Result<Subspace> {
    if g.dim() != x.n {
        return Err(Error::AmbientMismatch(g.dim(), x.n));
    }
    if !g.is_invertible(field) {
        return Err(Error::InvalidArgument("acting matrix is singular".into()));
    }
    let image: Vec<FfVector> = x.cols.iter().map(|c| g.apply(field, c)).collect();
    canonicalize(field, &image, x.n)
}

/// Pivotal indices recomputed as `{ j : X ∩ F_q^j ⊄ F_q^{j-1} }` (0-based),
/// using only ranks of the column space.
pub fn pivots_by_intersection(field: &Field, x: &Subspace) -> Vec<usize> {
    let dim_cap = |j: usize| -> usize {
        // X ∩ F_q^j = { Bc : rows j.. of Bc vanish }
        let lower: Vec<FfVector> = x.cols.iter().map(|c| c[j..].to_vec()).collect();
        x.k - if j == x.n { 0 } else { field.rank(&lower) }
    };
    (1..=x.n).filter(|&j| dim_cap(j) > dim_cap(j - 1)).map(|j| j - 1).collect()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// All `k`-dimensional subspaces in canonical order, generated straight
/// from the Schubert cells (pivot set, then free entries).
pub fn enumerate_subspaces(field: &Field, n: usize, k: usize) -> Vec<Subspace> {
    let mut out = Vec::new();
    for pivots in combinations(n, k) {
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(c, &r)| (0..r).filter(|i| !pivots.contains(i)).map(move |i| (c, i)))
            .collect();
        let mut template: Vec<FfVector> = pivots.iter().map(|&r| unit(n, r)).collect();
        let mut digits = vec![FieldElem::ZERO; free.len()];
        loop {
            for (&(c, i), &d) in free.iter().zip(&digits) {
                template[c][i] = d;
            }
            out.push(Subspace { n, k, pivots: pivots.clone(), cols: template.clone() });
            if !odometer(&mut digits, field.q() as u32) {
                break;
            }
        }
    }
    out
}

/// `B_q(n)` enumerated once, with a reverse index.
#[derive(Debug, Clone)]
pub struct Lattice {
    field: Field,
    n: usize,
    subspaces: Vec<Subspace>,
    index: HashMap<Subspace, usize>,
}

impl Lattice {
    pub fn new(field: &Field, n: usize, cap: u128) -> Result<Self> {
        check_cap(field.q(), n, cap)?;
        let subspaces: Vec<Subspace> =
            (0..=n).flat_map(|k| enumerate_subspaces(field, n, k)).collect();
        let index = subspaces.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        Ok(Lattice { field: field.clone(), n, subspaces, index })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.subspaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subspaces.is_empty()
    }

    pub fn subspaces(&self) -> &[Subspace] {
        &self.subspaces
    }

    pub fn get(&self, i: usize) -> &Subspace {
        &self.subspaces[i]
    }

    pub fn index_of(&self, x: &Subspace) -> Option<usize> {
        self.index.get(x).copied()
    }

    /// Indices of the `k`-dimensional subspaces (a contiguous range).
    pub fn rank_range(&self, k: usize) -> std::ops::Range<usize> {
        let start = self.subspaces.partition_point(|s| s.k < k);
        let end = self.subspaces.partition_point(|s| s.k <= k);
        start..end
    }
}

/// Refuses `(q, n)` when `G_q(n)` exceeds `cap`.
pub fn check_cap(q: u64, n: usize, cap: u128) -> Result<()> {
    let g = galois_number(q, n as u64);
    if g > BigInt::from(cap) {
        let size = u128::try_from(&g).unwrap_or(u128::MAX);
        return Err(Error::CapExceeded { what: "Galois number G_q(n)", size, cap });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::{q_binomial, q_int, q_pow};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f(q: u64) -> Field {
        Field::new(q).unwrap()
    }

    fn v(xs: &[u32]) -> FfVector {
        xs.iter().map(|&x| Field::new(2).unwrap().element(x).unwrap()).collect()
    }

    #[test]
    fn canonicalize_examples() {
        let f2 = f(2);
        let x = canonicalize(&f2, &[v(&[1, 1])], 2).unwrap();
        assert_eq!(x.columns(), &[v(&[1, 1])]);
        assert_eq!(x.pivots(), &[1]);
        let full = canonicalize(&f2, &[v(&[1, 1, 0]), v(&[0, 1, 0]), v(&[1, 1, 1])], 3).unwrap();
        assert_eq!(full, Subspace::full(3));
        assert_eq!(canonicalize(&f2, &[], 4).unwrap(), Subspace::zero(4));
        assert_eq!(canonicalize(&f2, &[v(&[0, 0])], 2).unwrap(), Subspace::zero(2));
        assert_eq!(canonicalize(&f2, &[v(&[1])], 2), Err(Error::AmbientMismatch(1, 2)));
        assert_eq!(canonicalize(&f2, x.columns(), 2).unwrap(), x);
    }

    #[test]
    fn enumeration_counts_and_order() {
        for (q, max_n) in [(2u64, 4usize), (3, 4), (4, 3), (5, 3)] {
            let field = f(q);
            for n in 0..=max_n {
                for k in 0..=n {
                    let subs = enumerate_subspaces(&field, n, k);
                    assert_eq!(BigInt::from(subs.len()), q_binomial(q, n as i64, k as i64));
                    assert!(subs.windows(2).all(|w| w[0] < w[1]), "strictly sorted");
                    for s in &subs {
                        assert_eq!(&canonicalize(&field, s.columns(), n).unwrap(), s);
                    }
                }
            }
        }
        assert_eq!(enumerate_subspaces(&f(2), 2, 1).len(), 3);
        assert_eq!(enumerate_subspaces(&f(7), 3, 0), vec![Subspace::zero(3)]);
        assert_eq!(enumerate_subspaces(&f(2), 4, 2).len(), 35);
    }

    #[test]
    fn pivots_by_intersection_matches() {
        for (q, n) in [(2u64, 4usize), (3, 3)] {
            let field = f(q);
            let lat = Lattice::new(&field, n, DEFAULT_CAP).unwrap();
            for s in lat.subspaces() {
                assert_eq!(pivots_by_intersection(&field, s), s.pivots());
            }
        }
        let f2 = f(2);
        let line = canonicalize(&f2, &[v(&[1, 1])], 2).unwrap();
        assert_eq!(pivots_by_intersection(&f2, &line), vec![1]);
        assert!(pivots_by_intersection(&f2, &Subspace::zero(3)).is_empty());
        assert_eq!(pivots_by_intersection(&f2, &Subspace::full(3)), vec![0, 1, 2]);
    }

    #[test]
    fn covers_examples() {
        let f2 = f(2);
        let line = Subspace::axis(2, 0);
        assert!(covers(&f2, &line, &Subspace::zero(2)));
        assert!(!covers(&f2, &line, &line));
        for l in enumerate_subspaces(&f2, 2, 1) {
            assert!(covers(&f2, &Subspace::full(2), &l));
        }
    }

    #[test]
    fn cover_counts() {
        for (q, n) in [(2u64, 4usize), (3, 3), (4, 2)] {
            let field = f(q);
            let lat = Lattice::new(&field, n, DEFAULT_CAP).unwrap();
            for x in lat.subspaces() {
                let ups = up_covers(&field, x);
                let downs = down_covers(&field, x);
                assert_eq!(BigInt::from(ups.len()), q_int(q, (n - x.dim()) as u64));
                assert_eq!(BigInt::from(downs.len()), q_int(q, x.dim() as u64));
                assert!(ups.iter().all(|y| covers(&field, y, x)));
                assert!(downs.iter().all(|z| covers(&field, x, z)));
                let brute_up = lat.subspaces().iter().filter(|y| covers(&field, y, x)).count();
                assert_eq!(brute_up, ups.len());
            }
        }
    }

    #[test]
    fn restriction_examples() {
        let f2 = f(2);
        assert_eq!(Subspace::full(3).restrict_to_hyperplane(), Subspace::full(2));
        let line = canonicalize(&f2, &[v(&[1, 1])], 2).unwrap();
        assert_eq!(line.restrict_to_hyperplane(), Subspace::zero(1));
        let inside = Subspace::axis(3, 0);
        assert_eq!(inside.restrict_to_hyperplane(), Subspace::axis(2, 0));
        let lat = Lattice::new(&f(3), 3, DEFAULT_CAP).unwrap();
        for x in lat.subspaces().iter().filter(|x| x.in_a()) {
            assert_eq!(x.restrict_to_hyperplane().dim(), x.dim() - 1);
        }
    }

    #[test]
    fn hat_examples() {
        assert_eq!(Subspace::zero(3).hat().unwrap(), Subspace::axis(3, 2));
        assert_eq!(Subspace::full(2).embed().hat().unwrap(), Subspace::full(3));
        assert!(Subspace::full(2).hat().is_err());
        let field = f(2);
        let lat = Lattice::new(&field, 3, DEFAULT_CAP).unwrap();
        for z in lat.subspaces() {
            for t in lat.subspaces() {
                let (zh, th) = (z.embed().hat().unwrap(), t.embed().hat().unwrap());
                assert_eq!(t.contains(&field, z), th.contains(&field, &zh));
                assert!(zh.in_a());
            }
        }
    }

    #[test]
    fn in_a_counts() {
        assert!(!Subspace::zero(2).in_a());
        assert!(Subspace::axis(2, 1).in_a());
        for (q, n) in [(2u64, 4usize), (3, 3)] {
            let lat = Lattice::new(&f(q), n, DEFAULT_CAP).unwrap();
            for k in 0..=n {
                let count = lat.rank_range(k).filter(|&i| lat.get(i).in_a()).count();
                let expected = q_binomial(q, n as i64, k as i64) - q_binomial(q, n as i64 - 1, k as i64);
                assert_eq!(BigInt::from(count), expected);
            }
        }
    }

    #[test]
    fn lifts_examples() {
        let f2 = f(2);
        assert_eq!(lifts_over(&f2, &Subspace::full(2)), vec![Subspace::full(3)]);
        let lifts = lifts_over(&f2, &Subspace::zero(2));
        assert_eq!(lifts.len(), 4);
        assert!(lifts.iter().all(|y| y.dim() == 1 && y.in_a()));
        for q in [2u64, 3] {
            let field = f(q);
            for n in 0..=3 {
                let upper = Lattice::new(&field, n + 1, DEFAULT_CAP).unwrap();
                for x in Lattice::new(&field, n, DEFAULT_CAP).unwrap().subspaces() {
                    let lifts = lifts_over(&field, x);
                    assert_eq!(BigInt::from(lifts.len()), q_pow(q, (n - x.dim()) as u64));
                    let filtered: Vec<&Subspace> = upper
                        .subspaces()
                        .iter()
                        .filter(|y| y.in_a() && &y.restrict_to_hyperplane() == x)
                        .collect();
                    assert_eq!(filtered.len(), lifts.len());
                    assert!(lifts.iter().all(|l| filtered.contains(&l)));
                }
            }
        }
    }

    #[test]
    fn cover_bipartite_regularity() {
        // Between the classes [X] and [Y] of A_q(n+1) (grouped by their trace on
        // F_q^n), cover degrees are q on the upper side and 1 on the lower side.
        for (q, n) in [(2u64, 3usize), (3, 2)] {
            let field = f(q);
            let lat = Lattice::new(&field, n, DEFAULT_CAP).unwrap();
            for x in lat.subspaces() {
                let lower_class = lifts_over(&field, x);
                for y in up_covers(&field, x) {
                    let upper_class = lifts_over(&field, &y);
                    for u in &upper_class {
                        let d = lower_class.iter().filter(|l| covers(&field, u, l)).count();
                        assert_eq!(d as u64, q);
                    }
                    for l in &lower_class {
                        let d = upper_class.iter().filter(|u| covers(&field, u, l)).count();
                        assert_eq!(d, 1);
                    }
                }
            }
        }
    }

    #[test]
    fn act_examples() {
        let field = f(3);
        let lat = Lattice::new(&field, 3, DEFAULT_CAP).unwrap();
        let id = GfMatrix::identity(3);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for x in lat.subspaces() {
            assert_eq!(&act(&field, &id, x).unwrap(), x);
        }
        assert_eq!(act(&field, &id, &Subspace::full(3)).unwrap(), Subspace::full(3));
        for _ in 0..50 {
            let g = loop {
                let rows = (0..3)
                    .map(|_| (0..3).map(|_| field.element(rng.random_range(0..3)).unwrap()).collect())
                    .collect();
                let g = GfMatrix { rows };
                if g.is_invertible(&field) {
                    break g;
                }
            };
            let x = lat.get(rng.random_range(0..lat.len()));
            assert_eq!(act(&field, &g, x).unwrap().dim(), x.dim());
            assert_eq!(act(&field, &g, &Subspace::full(3)).unwrap(), Subspace::full(3));
        }
        let singular = GfMatrix { rows: vec![vec![FieldElem::ZERO; 3]; 3] };
        assert!(act(&field, &singular, lat.get(3)).is_err());
    }

    #[test]
    fn cap_guard() {
        assert!(matches!(Lattice::new(&f(2), 5, 100), Err(Error::CapExceeded { .. })));
        assert!(Lattice::new(&f(2), 5, 374).is_ok());
    }

    #[test]
    fn json_rendering() {
        let f4 = f(4);
        let x = canonicalize(&f4, &[vec![f4.element(2).unwrap(), FieldElem::ONE]], 2).unwrap();
        assert_eq!(
            x.to_json(&f4).to_string(),
            r#"{"cols":[[[0,1],[1,0]]],"k":1,"n":2,"pivots":[2]}"#
        );
    }

    proptest! {
        #[test]
        fn canonical_form_is_basis_independent(seed in any::<u64>(), q in prop_oneof![Just(2u64), Just(3), Just(4), Just(5)]) {
            let field = f(q);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = rng.random_range(1..=4usize);
            let k = rng.random_range(0..=n);
            let subs = enumerate_subspaces(&field, n, k);
            let x = &subs[rng.random_range(0..subs.len())];
            // random spanning family: random combinations plus redundant vectors
            let mut family = Vec::new();
            for _ in 0..k + 2 {
                let mut w = vec![FieldElem::ZERO; n];
                for c in x.columns() {
                    let coef = field.element(rng.random_range(0..q as u32)).unwrap();
                    field.axpy(&mut w, coef, c);
                }
                family.push(w);
            }
            family.extend(x.columns().iter().cloned());
            prop_assert_eq!(&canonicalize(&field, &family, n).unwrap(), x);
        }
    }
}
