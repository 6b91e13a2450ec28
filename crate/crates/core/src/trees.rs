//! Weighted rooted spanning trees of the Hasse diagram `C_q(n)`.
//!
//! A spanning tree with a chosen root is oriented toward the root. An edge
//! `X → Y` with `dim Y = dim X + 1` contributes `dim X` to the weight `w(F)`,
//! and the count is `sum_F q^{w(F)}`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::linalg::{bareiss_det, charpoly, IntMatrix, IntPoly};
use crate::operators::build_mq;
use crate::par::Exec;
use crate::qarith::{galois_number, q_binomial, q_int, q_pow};
use crate::spectra::DENSE_CAP;
use crate::subspaces::{covers, Lattice};

/// Largest `n` accepted by the enumeration oracle.
pub const ENUMERATION_MAX_N: usize = 2;

/// `prod_{k=1}^n ((1 + q^{n-k}) (k)_q)^{[n,k]_q}`; `q = 1` gives the hypercube count.
pub fn tree_weight_formula(q: u64, n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidArgument("the tree count needs n >= 1".into()));
    }
    if q == 0 {
        return Err(Error::InvalidArgument("q must be positive".into()));
    }
    let mut acc = BigInt::one();
    for k in 1..=n {
        let base = (q_pow(q, (n - k) as u64) + 1u32) * q_int(q, k as u64);
        let e = u32::try_from(q_binomial(q, n as i64, k as i64))
            .map_err(|_| Error::InvalidArgument("multiplicity exponent too large".into()))?;
        acc *= num_traits::pow(base, e as usize);
    }
    Ok(acc)
}

fn check_dense(q: u64, n: usize) -> Result<()> {
    let g = galois_number(q, n as u64);
    if g > BigInt::from(DENSE_CAP) {
        let size = u128::try_from(&g).unwrap_or(u128::MAX);
        return Err(Error::CapExceeded { what: "Laplacian dimension", size, cap: DENSE_CAP });
    }
    Ok(())
}

/// `L(D) = (n)_q I - M_q(n)`.
pub fn directed_laplacian(q: u64, n: usize) -> Result<IntMatrix> {
    directed_laplacian_in(&Field::new(q)?, n)
}

pub fn directed_laplacian_in(field: &Field, n: usize) -> Result<IntMatrix> {
    let q = field.q();
    check_dense(q, n)?;
    let lattice = Lattice::new(field, n, DENSE_CAP)?;
    Ok(build_mq(&lattice).shifted_negation(&q_int(q, n as u64)))
}

/// Sum over all vertices of the principal minor of `L(D)` with that vertex removed.
pub fn rooted_count_via_minors(q: u64, n: usize) -> Result<BigInt> {
    rooted_count_via_minors_with(q, n, Exec::default())
}

pub fn rooted_count_via_minors_with(q: u64, n: usize, exec: Exec) -> Result<BigInt> {
    rooted_count_via_minors_in(&Field::new(q)?, n, exec)
}

pub fn rooted_count_via_minors_in(field: &Field, n: usize, exec: Exec) -> Result<BigInt> {
    let l = directed_laplacian_in(field, n)?;
    Ok(exec.map_range(l.dim(), |v| bareiss_det(l.principal_minor_matrix(v))).into_iter().sum())
}

/// `det(xI - L(D))` equals `prod_k (x - (1+q^{n-k})(k)_q)^{[n,k]_q}`, and its
/// linear coefficient is `(-1)^{G-1}` times the product of the nonzero eigenvalues.
pub fn laplacian_spectrum_check(q: u64, n: usize) -> Result<bool> {
    let l = directed_laplacian(q, n)?;
    let roots: Vec<(BigInt, u64)> = (0..=n)
        .map(|k| {
            let ev = (q_pow(q, (n - k) as u64) + 1u32) * q_int(q, k as u64);
            let m = u64::try_from(q_binomial(q, n as i64, k as i64)).expect("small multiplicity");
            (ev, m)
        })
        .collect();
    let cp = charpoly(&l);
    let expected = IntPoly::from_roots(roots.iter().map(|(r, m)| (r, *m)));
    if cp != expected {
        return Ok(false);
    }
    let linear = cp.coeffs().get(1).cloned().unwrap_or_else(BigInt::zero);
    let sign = if l.dim() % 2 == 0 { -BigInt::one() } else { BigInt::one() };
    Ok(linear * sign == tree_weight_formula(q, n)?)
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        r
    }
}

/// Direct enumeration of spanning trees of the undirected Hasse diagram, each
/// rooted at every vertex and weighted by its spin-up edges.
pub fn rooted_count_via_enumeration(q: u64, n: usize) -> Result<BigInt> {
    rooted_count_via_enumeration_in(&Field::new(q)?, n)
}

pub fn rooted_count_via_enumeration_in(field: &Field, n: usize) -> Result<BigInt> {
    let q = field.q();
    if n > ENUMERATION_MAX_N {
        return Err(Error::InvalidArgument(format!(
            "enumeration oracle supports n <= {ENUMERATION_MAX_N}, got {n}"
        )));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("the tree count needs n >= 1".into()));
    }
    let lattice = Lattice::new(field, n, DENSE_CAP)?;
    let subs = lattice.subspaces();
    let dims: Vec<usize> = subs.iter().map(|x| x.dim()).collect();
    let mut edges = Vec::new();
    for i in 0..subs.len() {
        for j in 0..subs.len() {
            if covers(field, &subs[j], &subs[i]) {
                edges.push((i, j));
            }
        }
    }
    let mut total = BigInt::zero();
    let mut chosen = Vec::new();
    let mut uf = UnionFind((0..subs.len()).collect());
    choose_edges(&edges, 0, &mut chosen, &mut uf, subs.len(), &mut |tree| {
        for root in 0..dims.len() {
            total += q_pow(q, tree_weight(tree, root, &dims));
        }
    });
    Ok(total)
}

// include/exclude each edge in order; an included edge must join two components
fn choose_edges(
    edges: &[(usize, usize)],
    at: usize,
    chosen: &mut Vec<(usize, usize)>,
    uf: &mut UnionFind,
    vertices: usize,
    visit: &mut dyn FnMut(&[(usize, usize)]),
) {
    if chosen.len() + 1 == vertices {
        visit(chosen);
        return;
    }
    if at == edges.len() || edges.len() - at < vertices - 1 - chosen.len() {
        return;
    }
    let (a, b) = edges[at];
    let (ra, rb) = (uf.find(a), uf.find(b));
    if ra != rb {
        let saved = uf.0.clone();
        uf.0[ra] = rb;
        chosen.push((a, b));
        choose_edges(edges, at + 1, chosen, uf, vertices, visit);
        chosen.pop();
        uf.0 = saved;
    }
    choose_edges(edges, at + 1, chosen, uf, vertices, visit);
}

fn tree_weight(tree: &[(usize, usize)], root: usize, dims: &[usize]) -> u64 {
    let nv = dims.len();
    let mut adj = vec![Vec::new(); nv];
    for &(a, b) in tree {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; nv];
    let mut stack = vec![root];
    seen[root] = true;
    let mut w = 0u64;
    while let Some(parent) = stack.pop() {
        for &child in &adj[parent] {
            if !seen[child] {
                seen[child] = true;
                // edge child -> parent
                if dims[parent] == dims[child] + 1 {
                    w += dims[child] as u64;
                }
                stack.push(child);
            }
        }
    }
    w
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeCountReport {
    pub q: u64,
    pub n: usize,
    pub formula: BigInt,
    pub minors: Option<BigInt>,
    pub enumeration: Option<BigInt>,
    /// `prod_k (2k)^{C(n,k)}`, filled in only at `q = 1`.
    pub hypercube: Option<BigInt>,
}

impl TreeCountReport {
    pub fn agree(&self) -> bool {
        [&self.minors, &self.enumeration, &self.hypercube].iter().all(|v| v.as_ref().is_none_or(|v| *v == self.formula))
    }
}

impl Serialize for TreeCountReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("TreeCountReport", 7)?;
        st.serialize_field("q", &self.q)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("formula", &self.formula.to_string())?;
        st.serialize_field("minors", &self.minors.as_ref().map(ToString::to_string))?;
        st.serialize_field("enumeration", &self.enumeration.as_ref().map(ToString::to_string))?;
        st.serialize_field("hypercube", &self.hypercube.as_ref().map(ToString::to_string))?;
        st.serialize_field("agree", &self.agree())?;
        st.end()
    }
}

/// Spanning-tree count of the `n`-cube, `prod_{k=1}^n (2k)^{C(n,k)}`.
pub fn hypercube_tree_count(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    let mut binom = BigInt::one();
    for k in 1..=n {
        binom = binom * (n - k + 1) / k;
        let e = usize::try_from(&binom).expect("small exponent");
        acc *= num_traits::pow(BigInt::from(2 * k), e);
    }
    acc
}

/// The formula, plus the minors and enumeration routes when requested.
pub fn tree_count_report(q: u64, n: usize, minors: bool, enumeration: bool, exec: Exec) -> Result<TreeCountReport> {
    let field = if minors || enumeration { Some(Field::new(q)?) } else { None };
    tree_count_report_in(q, field.as_ref(), n, minors, enumeration, exec)
}

/// As [`tree_count_report`]; `field` is needed only for the minors and enumeration routes.
pub fn tree_count_report_in(
    q: u64,
    field: Option<&Field>,
    n: usize,
    minors: bool,
    enumeration: bool,
    exec: Exec,
) -> Result<TreeCountReport> {
    let formula = tree_weight_formula(q, n)?;
    let need = || field.ok_or_else(|| Error::InvalidArgument("tree oracles need a finite field".into()));
    let minors = if minors { Some(rooted_count_via_minors_in(need()?, n, exec)?) } else { None };
    let enumeration = if enumeration { Some(rooted_count_via_enumeration_in(need()?, n)?) } else { None };
    let hypercube = if q == 1 { Some(hypercube_tree_count(n)) } else { None };
    Ok(TreeCountReport { q, n, formula, minors, enumeration, hypercube })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn formula_examples() {
        assert_eq!(tree_weight_formula(2, 1).unwrap(), bi(2));
        assert_eq!(tree_weight_formula(2, 2).unwrap(), bi(162));
        assert_eq!(tree_weight_formula(1, 2).unwrap(), bi(16));
        assert!(tree_weight_formula(2, 0).is_err());
    }

    #[test]
    fn hypercube_specialization() {
        for n in 1..=5u32 {
            let mut expected = BigInt::one();
            for k in 1..=n {
                let c = (1..=k).fold(1u64, |acc, i| acc * (n - k + i) as u64 / i as u64);
                expected *= BigInt::from(2 * k).pow(c as u32);
            }
            assert_eq!(tree_weight_formula(1, n as usize).unwrap(), expected, "n={n}");
        }
    }

    #[test]
    fn laplacian_examples() {
        let l = directed_laplacian(2, 1).unwrap();
        assert_eq!(l.to_dense(), vec![vec![bi(1), bi(-1)], vec![bi(-1), bi(1)]]);
        for (q, n) in [(2u64, 2usize), (3, 2), (2, 3)] {
            let l = directed_laplacian(q, n).unwrap();
            assert!(l.row_sums().iter().all(Zero::is_zero));
            assert!(laplacian_spectrum_check(q, n).unwrap());
        }
        assert!(matches!(directed_laplacian(2, 6), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn three_routes_agree() {
        for (q, n) in [(2u64, 1usize), (2, 2), (3, 2), (3, 1), (4, 2)] {
            let r = tree_count_report(q, n, true, true, Exec::default()).unwrap();
            assert!(r.agree(), "{r:?}");
        }
        assert_eq!(rooted_count_via_minors(2, 2).unwrap(), bi(162));
        assert_eq!(rooted_count_via_enumeration(2, 2).unwrap(), bi(162));
        assert_eq!(rooted_count_via_minors(2, 3).unwrap(), tree_weight_formula(2, 3).unwrap());
        assert!(rooted_count_via_enumeration(2, 3).is_err());
    }

    #[test]
    fn spanning_tree_count_small() {
        // C_2(2): bottom and top joined to each of 3 lines
        let edges: Vec<(usize, usize)> = (1..4).flat_map(|l| [(0, l), (l, 4)]).collect();
        let mut count = 0;
        let mut uf = UnionFind((0..5).collect());
        choose_edges(&edges, 0, &mut Vec::new(), &mut uf, 5, &mut |_| count += 1);
        assert_eq!(count, 12);
    }

    #[test]
    fn minors_parallel_matches_sequential() {
        assert_eq!(
            rooted_count_via_minors_with(3, 2, Exec::Sequential).unwrap(),
            rooted_count_via_minors_with(3, 2, Exec::Parallel).unwrap()
        );
    }

    #[test]
    fn q1_report_compares_hypercube() {
        let r = tree_count_report(1, 3, false, false, Exec::Sequential).unwrap();
        assert_eq!(r.hypercube, Some(bi(2 * 2 * 2 * 4 * 4 * 4 * 6)));
        assert!(r.agree());
        assert!(tree_count_report(1, 2, true, false, Exec::Sequential).is_err());
    }

    #[test]
    fn report_json() {
        let r = tree_count_report(2, 2, true, false, Exec::Sequential).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"q":2,"n":2,"formula":"162","minors":"162","enumeration":null,"hypercube":null,"agree":true})
        );
    }
}
