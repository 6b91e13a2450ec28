//! Finite fields `F_q = F_p[x]/(f)`, vectors over them, and the absolute trace.
//!
//! An element is encoded as the integer `sum c_i p^i` of its residue
//! polynomial `sum c_i x^i`. That encoding is also the integer order used
//! when subspaces are sorted.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::qarith::{QParams, MAX_Q};

/// Orders up to this size get precomputed operation tables.
const TABLE_LIMIT: u64 = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElem(u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    pub fn code(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// A vector in `F_q^n`.
pub type FfVector = Vec<FieldElem>;

/// Modulus table for the non-prime orders the crate knows about.
/// Coefficients are listed constant term first.
pub fn builtin_modulus(q: u64) -> Option<Vec<u32>> {
    Some(match q {
        4 => vec![1, 1, 1],
        8 => vec![1, 1, 0, 1],
        9 => vec![1, 0, 1],
        16 => vec![1, 1, 0, 0, 1],
        25 => vec![2, 0, 1],
        27 => vec![1, 2, 0, 1],
        _ => return None,
    })
}

#[derive(Debug)]
struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
    trace: Vec<u32>,
}

#[derive(Debug, Clone)]
pub struct Field {
    params: QParams,
    modulus: Vec<u32>,
    tables: Option<Arc<Tables>>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.params == other.params && self.modulus == other.modulus
    }
}
impl Eq for Field {}

impl Field {
    /// The field of order `q`, using the built-in modulus when `q` is not prime.
    pub fn new(q: u64) -> Result<Self> {
        let params = QParams::new(q)?;
        let modulus = if params.m == 1 {
            vec![0, 1]
        } else {
            builtin_modulus(q).ok_or(Error::MissingModulus(q))?
        };
        Self::build(params, modulus)
    }

    /// The field of order `q` defined by a user-supplied modulus.
    pub fn with_modulus(q: u64, modulus: Vec<u32>) -> Result<Self> {
        let params = QParams::new(q)?;
        Self::build(params, modulus)
    }

    fn build(params: QParams, modulus: Vec<u32>) -> Result<Self> {
        let p = params.p as u32;
        let m = params.m as usize;
        if modulus.len() != m + 1
            || modulus.last() != Some(&1)
            || modulus.iter().any(|&c| c >= p)
            || !is_irreducible(p, &modulus)
        {
            return Err(Error::BadModulus(modulus));
        }
        let mut field = Field { params, modulus, tables: None };
        if params.q <= TABLE_LIMIT {
            field.tables = Some(Arc::new(field.tabulate()));
        }
        Ok(field)
    }

    fn tabulate(&self) -> Tables {
        let q = self.params.q as usize;
        let mut t = Tables {
            add: vec![0; q * q],
            mul: vec![0; q * q],
            neg: vec![0; q],
            inv: vec![0; q],
            trace: vec![0; q],
        };
        for a in 0..q as u32 {
            for b in 0..q as u32 {
                t.add[a as usize * q + b as usize] = self.add_slow(a, b);
                t.mul[a as usize * q + b as usize] = self.mul_slow(a, b);
            }
            t.neg[a as usize] = self.neg_slow(a);
            t.trace[a as usize] = self.trace_slow(a);
        }
        for a in 1..q {
            t.inv[a] = (1..q).find(|&b| t.mul[a * q + b] == 1).unwrap() as u32;
        }
        t
    }

    pub fn params(&self) -> QParams {
        self.params
    }

    pub fn q(&self) -> u64 {
        self.params.q
    }

    pub fn p(&self) -> u32 {
        self.params.p as u32
    }

    pub fn degree(&self) -> u32 {
        self.params.m
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.params.q as u32).map(FieldElem)
    }

    pub fn element(&self, code: u32) -> Result<FieldElem> {
        if (code as u64) < self.params.q {
            Ok(FieldElem(code))
        } else {
            Err(Error::InvalidArgument(format!("{code} is not an element code of F_{}", self.q())))
        }
    }

    /// Embeds a prime-field integer.
    pub fn from_int(&self, n: i64) -> FieldElem {
        FieldElem(n.rem_euclid(self.p() as i64) as u32)
    }

    /// Residue polynomial coefficients, constant term first, length `m`.
    pub fn coefficients(&self, a: FieldElem) -> Vec<u32> {
        self.digits(a.0)
    }

    pub fn from_coefficients(&self, coeffs: &[u32]) -> Result<FieldElem> {
        if coeffs.len() > self.params.m as usize || coeffs.iter().any(|&c| c >= self.p()) {
            return Err(Error::InvalidArgument(format!("bad residue coefficients {coeffs:?}")));
        }
        Ok(FieldElem(self.undigits(coeffs)))
    }

    fn digits(&self, mut a: u32) -> Vec<u32> {
        let p = self.p();
        (0..self.params.m)
            .map(|_| {
                let d = a % p;
                a /= p;
                d
            })
            .collect()
    }

    fn undigits(&self, ds: &[u32]) -> u32 {
        ds.iter().rev().fold(0, |acc, &d| acc * self.p() + d)
    }

    fn add_slow(&self, a: u32, b: u32) -> u32 {
        let p = self.p();
        let s: Vec<u32> = self.digits(a).iter().zip(self.digits(b)).map(|(x, y)| (x + y) % p).collect();
        self.undigits(&s)
    }

    fn neg_slow(&self, a: u32) -> u32 {
        let p = self.p();
        let s: Vec<u32> = self.digits(a).iter().map(|x| (p - x) % p).collect();
        self.undigits(&s)
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let p = self.p() as u64;
        let m = self.params.m as usize;
        if m == 1 {
            return ((a as u64 * b as u64) % p) as u32;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // reduce by the monic modulus from the top down
        for deg in (m..prod.len()).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            prod[deg] = 0;
            for (i, &f) in self.modulus[..m].iter().enumerate() {
                let idx = deg - m + i;
                prod[idx] = (prod[idx] + (p - c) * f as u64) % p;
            }
        }
        let ds: Vec<u32> = prod[..m].iter().map(|&x| x as u32).collect();
        self.undigits(&ds)
    }

    fn pow_slow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }

    fn trace_slow(&self, a: u32) -> u32 {
        let mut acc = 0;
        let mut frob = a;
        for _ in 0..self.params.m {
            acc = self.add_slow(acc, frob);
            frob = self.pow_slow(frob, self.params.p);
        }
        debug_assert!(acc < self.p(), "trace must land in the prime field");
        acc
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        match &self.tables {
            Some(t) => FieldElem(t.add[a.0 as usize * self.params.q as usize + b.0 as usize]),
            None => FieldElem(self.add_slow(a.0, b.0)),
        }
    }

    pub fn neg(&self, a: FieldElem) -> FieldElem {
        match &self.tables {
            Some(t) => FieldElem(t.neg[a.0 as usize]),
            None => FieldElem(self.neg_slow(a.0)),
        }
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        match &self.tables {
            Some(t) => FieldElem(t.mul[a.0 as usize * self.params.q as usize + b.0 as usize]),
            None => FieldElem(self.mul_slow(a.0, b.0)),
        }
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.tables {
            Some(t) => FieldElem(t.inv[a.0 as usize]),
            None => FieldElem(self.pow_slow(a.0, self.params.q - 2)),
        })
    }

    pub fn pow(&self, a: FieldElem, e: u64) -> FieldElem {
        FieldElem(self.pow_slow(a.0, e))
    }

    /// Absolute trace `sum_{i<m} a^{p^i}`, returned as an integer in `0..p`.
    pub fn trace(&self, a: FieldElem) -> u32 {
        match &self.tables {
            Some(t) => t.trace[a.0 as usize],
            None => self.trace_slow(a.0),
        }
    }

    pub fn dot(&self, a: &[FieldElem], b: &[FieldElem]) -> Result<FieldElem> {
        if a.len() != b.len() {
            return Err(Error::AmbientMismatch(a.len(), b.len()));
        }
        Ok(a.iter().zip(b).fold(FieldElem::ZERO, |acc, (&x, &y)| self.add(acc, self.mul(x, y))))
    }

    /// All `q^n` vectors of `F_q^n`, last coordinate varying fastest.
    pub fn vectors(&self, n: usize) -> Vec<FfVector> {
        let total = (self.params.q as u128).pow(n as u32);
        assert!(total <= MAX_Q as u128 * MAX_Q as u128, "vector enumeration too large");
        let mut out = Vec::with_capacity(total as usize);
        let mut v = vec![FieldElem::ZERO; n];
        loop {
            out.push(v.clone());
            if !odometer(&mut v, self.params.q as u32) {
                return out;
            }
        }
    }

    /// `c * v`.
    pub fn scale_vec(&self, c: FieldElem, v: &[FieldElem]) -> FfVector {
        v.iter().map(|&x| self.mul(c, x)).collect()
    }

    /// `v += c * w`.
    pub fn axpy(&self, v: &mut [FieldElem], c: FieldElem, w: &[FieldElem]) {
        if c.is_zero() {
            return;
        }
        for (x, &y) in v.iter_mut().zip(w) {
            *x = self.add(*x, self.mul(c, y));
        }
    }

    /// Rank of a list of vectors.
    pub fn rank(&self, vectors: &[FfVector]) -> usize {
        let mut rows: Vec<FfVector> = vectors.to_vec();
        let width = rows.first().map_or(0, Vec::len);
        let mut rank = 0;
        for col in 0..width {
            let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, piv);
            let inv = self.inv(rows[rank][col]).unwrap();
            let pivot_row = self.scale_vec(inv, &rows[rank]);
            for r in 0..rows.len() {
                if r != rank && !rows[r][col].is_zero() {
                    let c = self.neg(rows[r][col]);
                    self.axpy(&mut rows[r], c, &pivot_row);
                }
            }
            rows[rank] = pivot_row;
            rank += 1;
        }
        rank
    }
}

/// Advances `v` as a base-`q` counter with the last entry fastest.
/// Returns false after wrapping around to all zeros.
pub(crate) fn odometer(v: &mut [FieldElem], q: u32) -> bool {
    for x in v.iter_mut().rev() {
        if x.0 + 1 < q {
            x.0 += 1;
            return true;
        }
        x.0 = 0;
    }
    false
}

/// Remainder of `a` modulo the monic polynomial `f` over `F_p` (constant term first).
fn poly_rem(p: u32, a: &[u32], f: &[u32]) -> Vec<u32> {
    let mut r: Vec<u64> = a.iter().map(|&x| x as u64).collect();
    let df = f.len() - 1;
    let p = p as u64;
    while r.len() > df {
        let c = r.pop().unwrap();
        if c != 0 {
            let shift = r.len() - df;
            for (i, &fi) in f[..df].iter().enumerate() {
                r[shift + i] = (r[shift + i] + (p - c) * fi as u64 % p) % p;
            }
        }
    }
    r.into_iter().map(|x| x as u32).collect()
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
pub fn is_irreducible(p: u32, f: &[u32]) -> bool {
    let deg = f.len() - 1;
    if deg == 0 || f[deg] != 1 {
        return false;
    }
    for d in 1..=deg / 2 {
        let mut low = vec![FieldElem::ZERO; d];
        loop {
            let mut g: Vec<u32> = low.iter().map(|x| x.0).collect();
            g.push(1);
            if poly_rem(p, f, &g).iter().all(|&c| c == 0) {
                return false;
            }
            if !odometer(&mut low, p) {
                break;
            }
        }
    }
    true
}

/// An invertible-or-not square matrix over `F_q`, stored by rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GfMatrix {
    pub rows: Vec<FfVector>,
}

impl GfMatrix {
    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| if i == j { FieldElem::ONE } else { FieldElem::ZERO }).collect())
            .collect();
        GfMatrix { rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn apply(&self, field: &Field, v: &[FieldElem]) -> FfVector {
        self.rows.iter().map(|row| field.dot(row, v).unwrap()).collect()
    }

    pub fn is_invertible(&self, field: &Field) -> bool {
        field.rank(&self.rows) == self.dim()
    }
}
