//! Exact integer and rational linear algebra: sparse integer matrices,
//! division-free characteristic polynomials, Bareiss determinants and
//! rational linear solves.

use std::fmt::Write;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Square big-integer matrix stored by sparse rows (column-sorted).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    rows: Vec<Vec<(usize, BigInt)>>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        IntMatrix { dim, rows: vec![Vec::new(); dim] }
    }

    pub fn from_dense(dense: &[Vec<BigInt>]) -> Self {
        let rows = dense
            .iter()
            .map(|r| {
                assert_eq!(r.len(), dense.len(), "matrix must be square");
                r.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(j, v)| (j, v.clone())).collect()
            })
            .collect();
        IntMatrix { dim: dense.len(), rows }
    }

    /// Builds from unsorted `(row, col, value)` triples; duplicates are summed.
    pub fn from_triples(dim: usize, triples: impl IntoIterator<Item = (usize, usize, BigInt)>) -> Self {
        let mut m = IntMatrix::zeros(dim);
        for (i, j, v) in triples {
            m.rows[i].push((j, v));
        }
        for row in &mut m.rows {
            row.sort_by_key(|(j, _)| *j);
            let mut merged: Vec<(usize, BigInt)> = Vec::with_capacity(row.len());
            for (j, v) in row.drain(..) {
                match merged.last_mut() {
                    Some((lj, lv)) if *lj == j => *lv += v,
                    _ => merged.push((j, v)),
                }
            }
            merged.retain(|(_, v)| !v.is_zero());
            *row = merged;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn row(&self, i: usize) -> &[(usize, BigInt)] {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> BigInt {
        match self.rows[i].binary_search_by_key(&j, |(c, _)| *c) {
            Ok(pos) => self.rows[i][pos].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut d = vec![vec![BigInt::zero(); self.dim]; self.dim];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row {
                d[i][*j] = v.clone();
            }
        }
        d
    }

    pub fn row_sums(&self) -> Vec<BigInt> {
        self.rows.iter().map(|r| r.iter().map(|(_, v)| v).sum()).collect()
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.rows.iter().map(|r| r.iter().map(|(j, a)| a * &v[*j]).sum()).collect()
    }

    pub fn mul_vec_rational(&self, v: &[BigRational]) -> Vec<BigRational> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|(j, a)| &v[*j] * a).fold(BigRational::zero(), |x, y| x + y))
            .collect()
    }

    /// `c·I - self`.
    pub fn shifted_negation(&self, c: &BigInt) -> IntMatrix {
        let triples = self
            .rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, -v)))
            .chain((0..self.dim).map(|i| (i, i, c.clone())));
        IntMatrix::from_triples(self.dim, triples.collect::<Vec<_>>())
    }

    /// Dense copy with row and column `v` deleted.
    pub fn principal_minor_matrix(&self, v: usize) -> Vec<Vec<BigInt>> {
        let mut d = self.to_dense();
        d.remove(v);
        for row in &mut d {
            row.remove(v);
        }
        d
    }

    /// Matrix Market coordinate format, integer entries, 1-based indices.
    pub fn to_matrix_market(&self) -> String {
        let mut s = String::from("%%MatrixMarket matrix coordinate integer general\n");
        writeln!(s, "{} {} {}", self.dim, self.dim, self.nnz()).unwrap();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row {
                writeln!(s, "{} {} {}", i + 1, j + 1, v).unwrap();
            }
        }
        s
    }
}

/// Integer polynomial, coefficients in ascending degree, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly(Vec<BigInt>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly(coeffs)
    }

    pub fn one() -> Self {
        IntPoly(vec![BigInt::one()])
    }

    /// `x - root`.
    pub fn linear(root: &BigInt) -> Self {
        IntPoly::new(vec![-root, BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.0.is_empty() || other.0.is_empty() {
            return IntPoly(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn pow(&self, e: u64) -> IntPoly {
        (0..e).fold(IntPoly::one(), |acc, _| acc.mul(self))
    }

    /// `prod (x - root)^mult`.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = (&'a BigInt, u64)>) -> IntPoly {
        roots.into_iter().fold(IntPoly::one(), |acc, (r, m)| acc.mul(&IntPoly::linear(r).pow(m)))
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.0.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

/// `det(xI - A)` by Berkowitz's division-free algorithm, exploiting sparsity
/// in the repeated products `R A_r^j C`.
pub fn charpoly(a: &IntMatrix) -> IntPoly {
    let n = a.dim();
    // descending coefficients of the leading r×r block's characteristic polynomial
    let mut poly: Vec<BigInt> = vec![BigInt::one()];
    for r in 0..n {
        let diag = a.get(r, r);
        let col: Vec<BigInt> = (0..r).map(|i| a.get(i, r)).collect();
        let row: Vec<(usize, &BigInt)> =
            a.row(r).iter().filter(|(j, _)| *j < r).map(|(j, v)| (*j, v)).collect();
        let mut t = Vec::with_capacity(r + 2);
        t.push(BigInt::one());
        t.push(-diag);
        let mut v = col;
        for step in 0..r {
            let rv: BigInt = row.iter().map(|(j, x)| *x * &v[*j]).sum();
            t.push(-rv);
            if step + 1 < r {
                v = (0..r)
                    .map(|i| a.row(i).iter().filter(|(j, _)| *j < r).map(|(j, x)| x * &v[*j]).sum())
                    .collect();
            }
        }
        let mut next = vec![BigInt::zero(); r + 2];
        for (i, ti) in t.iter().enumerate() {
            if ti.is_zero() {
                continue;
            }
            for (j, pj) in poly.iter().enumerate() {
                if i + j < r + 2 {
                    next[i + j] += ti * pj;
                }
            }
        }
        poly = next;
    }
    poly.reverse();
    IntPoly::new(poly)
}

/// Determinant by Bareiss fraction-free elimination with row pivoting.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let val = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = val;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Some solution of `A x = b` over `Q` (free variables set to zero), or `None`
/// if the system is inconsistent. `a` is given by rows.
pub fn solve_rational(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<BigRational>> =
        a.iter().zip(b).map(|(r, x)| r.iter().cloned().chain([x.clone()]).collect()).collect();
    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&i| !aug[i][c].is_zero()) else {
            continue;
        };
        aug.swap(rank, p);
        let inv = aug[rank][c].recip();
        for x in aug[rank].iter_mut() {
            *x *= &inv;
        }
        let pivot = aug[rank].clone();
        for (i, row) in aug.iter_mut().enumerate() {
            if i != rank && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        pivot_cols.push(c);
        rank += 1;
    }
    if aug[rank..].iter().any(|r| !r[cols].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); cols];
    for (i, &c) in pivot_cols.iter().enumerate() {
        x[c] = aug[i][cols].clone();
    }
    Some(x)
}

/// Renders an integer polynomial as a human-readable string.
pub fn poly_to_string(p: &IntPoly) -> String {
    if p.0.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (d, c) in p.0.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        match d {
            0 => write!(s, "{a}").unwrap(),
            _ => {
                if !a.is_one() {
                    write!(s, "{a}").unwrap();
                }
                s.push('x');
                if d > 1 {
                    write!(s, "^{d}").unwrap();
                }
            }
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| bi(x)).collect()).collect()
    }

    /// Laplace expansion along the first row; exponential, test oracle only.
    fn laplace_det(m: &[Vec<BigInt>]) -> BigInt {
        if m.is_empty() {
            return BigInt::one();
        }
        (0..m.len())
            .map(|j| {
                let minor: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| v.clone()).collect())
                    .collect();
                let s = if j % 2 == 0 { bi(1) } else { bi(-1) };
                s * &m[0][j] * laplace_det(&minor)
            })
            .sum()
    }

    #[test]
    fn bareiss_matches_laplace() {
        let cases = [
            mat(&[&[2, 1], &[1, 3]]),
            mat(&[&[0, 1, 2], &[3, 0, 1], &[4, 5, 0]]),
            mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]),
            mat(&[&[0, 0, 1, 2], &[1, 0, 3, 0], &[0, 2, 0, 1], &[5, 1, 1, 1]]),
        ];
        for m in cases {
            assert_eq!(bareiss_det(m.clone()), laplace_det(&m));
        }
        assert_eq!(bareiss_det(Vec::new()), bi(1));
    }

    #[test]
    fn charpoly_matches_point_evaluation() {
        let m = mat(&[&[0, 1, 2, 0], &[3, 0, 1, 4], &[4, 5, 0, 1], &[1, 0, 2, 7]]);
        let a = IntMatrix::from_dense(&m);
        let p = charpoly(&a);
        assert_eq!(p.degree(), Some(4));
        for t in -3..=3 {
            let shifted = a.shifted_negation(&bi(t));
            assert_eq!(p.eval(&bi(t)), laplace_det(&shifted.to_dense()));
        }
        let two = IntMatrix::from_dense(&mat(&[&[0, 1], &[1, 0]]));
        assert_eq!(charpoly(&two), IntPoly::from_roots([(&bi(1), 1), (&bi(-1), 1)]));
        assert_eq!(charpoly(&IntMatrix::zeros(0)), IntPoly::one());
    }

    #[test]
    fn solve() {
        let r = |n: i64| BigRational::from_integer(n.into());
        let a = vec![vec![r(1), r(1)], vec![r(1), r(-1)], vec![r(2), r(0)]];
        let x = solve_rational(&a, &[r(3), r(1), r(4)]).unwrap();
        assert_eq!(x, vec![r(2), r(1)]);
        assert!(solve_rational(&a, &[r(3), r(1), r(5)]).is_none());
    }

    #[test]
    fn triples_and_market() {
        let m = IntMatrix::from_triples(2, vec![(0, 1, bi(2)), (0, 1, bi(1)), (1, 0, bi(1)), (1, 1, bi(0))]);
        assert_eq!(m.get(0, 1), bi(3));
        assert_eq!(m.nnz(), 2);
        assert_eq!(
            m.to_matrix_market(),
            "%%MatrixMarket matrix coordinate integer general\n2 2 2\n1 2 3\n2 1 1\n"
        );
        assert_eq!(poly_to_string(&IntPoly::from_roots([(&bi(3), 1), (&bi(0), 2)])), "x^3 - 3x^2");
    }
}
