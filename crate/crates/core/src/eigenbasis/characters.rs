//! The translation group `H(n+1)`, its characters, and the maps built from
//! them: the lift `θ_n`, the projections `p(χ)`, the hyperplane `X(χ)`, the
//! Schubert transport `μ(X)` and the embedding `λ(χ)`.
//!
//! `g_u ∈ H(n+1)` is the identity with last column `(u, 1)`, i.e. it sends
//! `e_{n+1}` to `e_{n+1} + u`. The character with label `a ∈ F_q^n` is
//! `χ_a(g_u) = ζ_p^{Tr(a·u)}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::gf::{FfVector, Field, FieldElem, GfMatrix};
use crate::operators::FormalVector;
use crate::qarith::q_pow;
use crate::subspaces::{canonicalize, enumerate_subspaces, lifts_over, Subspace};

/// A character of `H(n+1) ≅ (F_q^n, +)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character {
    label: FfVector,
}

impl Character {
    pub fn new(label: FfVector) -> Self {
        Character { label }
    }

    pub fn trivial(n: usize) -> Self {
        Character { label: vec![FieldElem::ZERO; n] }
    }

    pub fn label(&self) -> &[FieldElem] {
        &self.label
    }

    /// `n`, where this is a character of `H(n+1)`.
    pub fn level(&self) -> usize {
        self.label.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.label.iter().all(|x| x.is_zero())
    }

    /// The exponent `Tr(a·u)` in `χ(g_u) = ζ_p^{Tr(a·u)}`.
    pub fn exponent(&self, field: &Field, u: &[FieldElem]) -> Result<u32> {
        Ok(field.trace(field.dot(&self.label, u)?))
    }

    pub fn value(&self, field: &Field, u: &[FieldElem]) -> Result<Cyclotomic> {
        Cyclotomic::root(field.p(), self.exponent(field, u)? as i64)
    }

    pub fn to_json(&self, field: &Field) -> Value {
        let label: Vec<Vec<u32>> = self.label.iter().map(|&x| field.coefficients(x)).collect();
        json!({"level": self.level(), "label": label})
    }
}

/// All `q^n` characters of `H(n+1)`, the trivial one first.
pub fn characters(field: &Field, n: usize) -> Vec<Character> {
    field.vectors(n).into_iter().map(Character::new).collect()
}

/// The `q^n - 1` nontrivial characters.
pub fn nontrivial_characters(field: &Field, n: usize) -> Vec<Character> {
    characters(field, n).into_iter().filter(|c| !c.is_trivial()).collect()
}

/// The matrix of `g_u` in `GL(n+1)`.
pub fn group_element(u: &[FieldElem]) -> GfMatrix {
    let n = u.len();
    let mut g = GfMatrix::identity(n + 1);
    for (i, &x) in u.iter().enumerate() {
        g.rows[i][n] = x;
    }
    g
}

/// `θ_n`: each `X ∈ B_q(n)` goes to the sum of the `q^{n-dim X}` subspaces of
/// `A_q(n+1)` meeting `F_q^n` in `X`.
pub fn theta(field: &Field, v: &FormalVector) -> Result<FormalVector> {
    let mut out = FormalVector::zero(v.params(), v.ambient() + 1);
    for (x, c) in v.iter() {
        for y in lifts_over(field, x) {
            out.add_term(y, c)?;
        }
    }
    Ok(out)
}

/// The `w` with `θ_n(w) = v`, if `v` lies in the image of `θ_n`.
pub fn theta_preimage(field: &Field, v: &FormalVector) -> Result<Option<FormalVector>> {
    if v.ambient() == 0 {
        return Err(Error::InvalidArgument("no θ preimage in F_q^0".into()));
    }
    let mut w = FormalVector::zero(v.params(), v.ambient() - 1);
    for (y, c) in v.iter() {
        if !y.in_a() {
            return Ok(None);
        }
        let x = y.restrict_to_hyperplane();
        if w.get(&x).is_zero() {
            w.add_term(x, c)?;
        }
    }
    Ok(if theta(field, &w)? == *v { Some(w) } else { None })
}

fn check_level(chi: &Character, x: &Subspace) -> Result<()> {
    if x.ambient() != chi.level() + 1 {
        return Err(Error::AmbientMismatch(x.ambient(), chi.level() + 1));
    }
    if !x.in_a() {
        return Err(Error::InvalidArgument("p(χ) needs a subspace outside the hyperplane".into()));
    }
    Ok(())
}

/// Whether `χ` is trivial on the stabilizer `{g_u : u ∈ X^r}` of `X ∈ A_q(n+1)`.
/// Checked on every element `c·b` with `b` a basis column of `X^r` and `c ∈ F_q`,
/// which generate the stabilizer.
pub fn trivial_on_stabilizer(field: &Field, chi: &Character, x: &Subspace) -> Result<bool> {
    check_level(chi, x)?;
    let xr = x.restrict_to_hyperplane();
    for b in xr.columns() {
        for c in field.elements() {
            if chi.exponent(field, &field.scale_vec(c, b))? != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `p(χ)(X) = sum_{g ∈ H} conj(χ(g)) g·X`, computed over the orbit of `X`.
///
/// The orbit of `X = span(X^r, (w, 1))` is `{ span(X^r, (w + u, 1)) }` with `u`
/// running over coset representatives of `X^r`, and the stabilizer is
/// `{g_u : u ∈ X^r}` of order `q^{dim X^r}`. When `χ` is nontrivial on the
/// stabilizer the sum vanishes exactly.
pub fn p_chi(field: &Field, chi: &Character, x: &Subspace) -> Result<FormalVector> {
    let n = chi.level();
    let mut out = FormalVector::zero(field.params(), n + 1);
    if !trivial_on_stabilizer(field, chi, x)? {
        return Ok(out);
    }
    let xr = x.restrict_to_hyperplane();
    let last = x.columns().last().expect("x meets the complement of the hyperplane");
    let w: FfVector = last[..n].to_vec();
    let base: Vec<FfVector> = xr.embed().columns().to_vec();
    let stab = BigRational::from_integer(q_pow(field.q(), xr.dim() as u64));
    for u in xr.coset_representatives(field) {
        let mut top: FfVector = w.iter().zip(&u).map(|(&a, &b)| field.add(a, b)).collect();
        top.push(FieldElem::ONE);
        let mut vs = base.clone();
        vs.push(top);
        let z = canonicalize(field, &vs, n + 1)?;
        let coeff = Cyclotomic::root(field.p(), -(chi.exponent(field, &u)? as i64))?.scale(&stab);
        out.add_term(z, &coeff)?;
    }
    Ok(out)
}

/// `Ŷ` for `Y ⊆ F_q^n`: `span(Y, e_{n+1})` in `F_q^{n+1}`.
pub fn hat_of(y: &Subspace) -> Subspace {
    y.embed().hat().expect("an embedded subspace lies in the hyperplane")
}

/// The unique hyperplane `Y` of `F_q^n` with `p(χ)(Ŷ) ≠ 0`, found by scanning all hyperplanes.
pub fn x_of_chi(field: &Field, chi: &Character) -> Result<Subspace> {
    if chi.is_trivial() {
        return Err(Error::InvalidArgument("X(χ) is defined only for nontrivial χ".into()));
    }
    let n = chi.level();
    let mut found = None;
    for y in enumerate_subspaces(field, n, n - 1) {
        if trivial_on_stabilizer(field, chi, &hat_of(&y))? {
            if found.is_some() {
                return Err(Error::Invariant("two hyperplanes with nonzero projection".into()));
            }
            found = Some(y);
        }
    }
    found.ok_or_else(|| Error::Invariant("no hyperplane with nonzero projection".into()))
}

fn check_hyperplane(x: &Subspace) -> Result<()> {
    if x.ambient() == 0 || x.dim() + 1 != x.ambient() {
        return Err(Error::InvalidArgument("μ(X) needs a hyperplane X".into()));
    }
    Ok(())
}

/// `τ(X)`: `F_q^{n-1} → X`, sending `e_j` to column `j` of the Schubert normal form of `X`.
pub fn tau(field: &Field, x: &Subspace, v: &[FieldElem]) -> FfVector {
    let mut out = vec![FieldElem::ZERO; x.ambient()];
    for (&c, col) in v.iter().zip(x.columns()) {
        field.axpy(&mut out, c, col);
    }
    out
}

/// `μ(X)` on a single subspace of `F_q^{n-1}`.
pub fn mu_subspace(field: &Field, x: &Subspace, y: &Subspace) -> Result<Subspace> {
    check_hyperplane(x)?;
    if y.ambient() != x.dim() {
        return Err(Error::AmbientMismatch(y.ambient(), x.dim()));
    }
    let image: Vec<FfVector> = y.columns().iter().map(|c| tau(field, x, c)).collect();
    canonicalize(field, &image, x.ambient())
}

/// `μ(X)^{-1}` on a subspace of `X`: read off the coordinates on the pivot rows of `X`.
pub fn mu_inverse_subspace(field: &Field, x: &Subspace, z: &Subspace) -> Result<Subspace> {
    check_hyperplane(x)?;
    if !x.contains(field, z) {
        return Err(Error::InvalidArgument("subspace is not inside X".into()));
    }
    let coords: Vec<FfVector> =
        z.columns().iter().map(|c| x.pivots().iter().map(|&r| c[r]).collect()).collect();
    canonicalize(field, &coords, x.dim())
}

/// `μ(X)`: `C[B_q(n-1)] → C[B_q(X)]`.
pub fn mu(field: &Field, x: &Subspace, v: &FormalVector) -> Result<FormalVector> {
    check_hyperplane(x)?;
    let mut out = FormalVector::zero(v.params(), x.ambient());
    for (y, c) in v.iter() {
        out.add_term(mu_subspace(field, x, y)?, c)?;
    }
    Ok(out)
}

/// `λ(χ)`: `C[B_q(X(χ))] → W(χ)`, `Y ↦ q^{-dim Y} p(χ)(Ŷ)`.
pub fn lambda_chi(field: &Field, chi: &Character, x: &Subspace, v: &FormalVector) -> Result<FormalVector> {
    let n = chi.level();
    let mut out = FormalVector::zero(field.params(), n + 1);
    for (y, c) in v.iter() {
        if !x.contains(field, y) {
            return Err(Error::InvalidArgument("λ(χ) applied outside B_q(X(χ))".into()));
        }
        let scale = BigRational::new(BigInt::from(1), q_pow(field.q(), y.dim() as u64));
        let image = p_chi(field, chi, &hat_of(y))?;
        out = out.add_scaled(&image, &c.scale(&scale))?;
    }
    Ok(out)
}

/// Per-dimension counts of `Y ∈ B_q(n)` with `p(χ)(Ŷ) ≠ 0`; entry `j` counts `dim Y = j`.
pub fn nonzero_projection_counts(field: &Field, chi: &Character) -> Result<Vec<u64>> {
    let n = chi.level();
    (0..=n)
        .map(|j| {
            let mut count = 0;
            for y in enumerate_subspaces(field, n, j) {
                if !p_chi(field, chi, &hat_of(&y))?.is_zero() {
                    count += 1;
                }
            }
            Ok(count)
        })
        .collect()
}
