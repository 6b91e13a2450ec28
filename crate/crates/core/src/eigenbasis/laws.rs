//! Exact checks on a built eigenbasis: eigen-residuals, orthogonality, the
//! norm and coordinate recursions, the conjugate flip, and the identities
//! relating `A_q(n+1)` to `A_q(n)` through `θ_n`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::cyclotomic::Cyclotomic;
use crate::error::Result;
use crate::gf::Field;
use crate::operators::{apply_a, down, inner_product_pi, up, FormalVector};
use crate::par::Exec;
use crate::qarith::{galois_number, q_binomial, q_pow};
use crate::spectra::spectrum;
use crate::subspaces::{Lattice, Subspace, DEFAULT_CAP};

use super::characters::{mu_inverse_subspace, nontrivial_characters, nonzero_projection_counts, theta, theta_preimage, x_of_chi};
use super::{ChainEntry, EigenBasis};

fn rat(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

/// `A_q(n) v_α = λ_α v_α` for every basis vector of the top level.
pub fn eigen_residuals_vanish(basis: &EigenBasis, exec: Exec) -> Result<bool> {
    let field = basis.field();
    let results = exec.map(basis.vectors(), |ev| -> Result<bool> {
        let av = apply_a(field, &ev.vector)?;
        Ok(av == ev.vector.scale_int(&ev.lambda))
    });
    results.into_iter().try_fold(true, |acc, r| Ok(acc && r?))
}

/// Every off-diagonal π-inner product of the top level is exactly zero.
pub fn verify_orthogonality(basis: &EigenBasis, exec: Exec) -> Result<bool> {
    let vs = basis.vectors();
    let rows = exec.map_range(vs.len(), |i| -> Result<bool> {
        for j in i + 1..vs.len() {
            if !inner_product_pi(&vs[i].vector, &vs[j].vector)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    });
    rows.into_iter().try_fold(true, |acc, r| Ok(acc && r?))
}

/// The basis has `G_q(n)` nonzero vectors whose eigenvalues reproduce the
/// closed-form spectrum with multiplicities.
pub fn basis_matches_spectrum(basis: &EigenBasis) -> bool {
    let q = basis.q();
    let n = basis.n();
    if BigInt::from(basis.len()) != galois_number(q, n as u64) || basis.vectors().iter().any(|v| v.vector.is_zero()) {
        return false;
    }
    let mut counts: BTreeMap<BigInt, BigInt> = BTreeMap::new();
    for ev in basis.vectors() {
        *counts.entry(ev.lambda.clone()).or_default() += 1;
    }
    let expected: BTreeMap<BigInt, BigInt> = spectrum(q, n).pairs.into_iter().map(|p| (p.lambda, p.mult)).collect();
    counts == expected
}

/// The norm recursions at every level `1..=n`:
/// `(q^m + q^{2k})/(1+q^m)`, `(q^m + q^{2(m-k)})/(1+q^m)` for the lifts from
/// level `m`, and `q^m/((1+q^{m-1})(1+q^m))` for the transports from level `m-1`.
pub fn norm_recursions_hold(basis: &EigenBasis) -> Result<bool> {
    let q = basis.q();
    let qp = |e: usize| rat(q_pow(q, e as u64));
    for level in 1..=basis.n() {
        let m = level - 1;
        for ev in basis.level(level) {
            let (beta, last) = ev.alpha.parent().expect("nonempty index");
            let k = beta.weight();
            let (factor, parent_level) = match last {
                ChainEntry::Zero => ((qp(m) + qp(2 * k)) / (qp(m) + qp(0)), m),
                ChainEntry::One => ((qp(m) + qp(2 * (m - k))) / (qp(m) + qp(0)), m),
                ChainEntry::Char(_) => (qp(m) / ((qp(m - 1) + qp(0)) * (qp(m) + qp(0))), m - 1),
            };
            let parent = basis.get(parent_level, &beta).expect("parent index present");
            if ev.norm_sq()? != parent.norm_sq()?.scale(&factor) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The coordinate laws at every level `1..=n`. For the lifts from level `m`,
/// `v_α(Y)` is `q^k v_β(Y)` (resp. `q^{m-k} v_β(Y)`) on `B_q(m)` and
/// `v_β(Y^r)` (resp. `-v_β(Y^r)`) off it. For the transport through `X = X(χ)`,
/// `|v_α(Y)|²` vanishes unless `Y` leaves the hyperplane with `Y^r ⊆ X`, where
/// it equals `|v_β(μ(X)^{-1} Y^r)|²`.
pub fn coordinate_laws_hold(basis: &EigenBasis) -> Result<bool> {
    let field = basis.field();
    let q = basis.q();
    let p = field.p();
    for level in 1..=basis.n() {
        let m = level - 1;
        let lattice = Lattice::new(field, level, DEFAULT_CAP)?;
        for ev in basis.level(level) {
            let (beta, last) = ev.alpha.parent().expect("nonempty index");
            let k = beta.weight();
            let ok = match last {
                ChainEntry::Zero | ChainEntry::One => {
                    let vb = &basis.get(m, &beta).expect("parent").vector;
                    let (low, high) = if *last == ChainEntry::Zero {
                        (q_pow(q, k as u64), Cyclotomic::one(p))
                    } else {
                        (q_pow(q, (m - k) as u64), Cyclotomic::from_integer(p, -1))
                    };
                    lattice.subspaces().iter().all(|y| {
                        let yr = y.restrict_to_hyperplane();
                        let expected = if y.in_a() {
                            &vb.get(&yr) * &high
                        } else {
                            vb.get(&yr).scale(&rat(low.clone()))
                        };
                        ev.vector.get(y) == expected
                    })
                }
                ChainEntry::Char(chi) => {
                    let vb = &basis.get(m - 1, &beta).expect("parent").vector;
                    let x = x_of_chi(field, chi)?;
                    let mut ok = true;
                    for y in lattice.subspaces() {
                        let got = ev.vector.get(y).abs_sq();
                        let yr = y.restrict_to_hyperplane();
                        let expected = if y.in_a() && x.contains(field, &yr) {
                            vb.get(&mu_inverse_subspace(field, &x, &yr)?).abs_sq()
                        } else {
                            Cyclotomic::zero(p)
                        };
                        if got != expected {
                            ok = false;
                            break;
                        }
                    }
                    ok
                }
            };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `|v_α(Y)|² = |v_ᾱ(Y)|²` for all `Y`, and equal norms, at every level.
pub fn conjugate_flip_holds(basis: &EigenBasis) -> Result<bool> {
    for level in 0..=basis.n() {
        for ev in basis.level(level) {
            let flip = basis.get(level, &ev.alpha.conjugate()).expect("conjugate index present");
            let support_ok = ev
                .vector
                .support()
                .chain(flip.vector.support())
                .all(|y| ev.vector.get(y).abs_sq() == flip.vector.get(y).abs_sq());
            if !support_ok || ev.norm_sq()? != flip.norm_sq()? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `A_q(n+1) v = A_q(n) v + θ_n(v)` for `v ∈ C[B_q(n)]`.
pub fn embedding_identity_holds(field: &Field, v: &FormalVector) -> Result<bool> {
    let lhs = apply_a(field, &v.embed())?;
    let rhs = apply_a(field, v)?.embed().checked_add(&theta(field, v)?)?;
    Ok(lhs == rhs)
}

/// `A_q(n+1) θ_n(v) = q^n v + θ_n(q A_q(n) v)`, i.e. the θ-conjugate of
/// `A′_q(n)` acts as `q M_q(n)`.
pub fn lift_identity_holds(field: &Field, v: &FormalVector) -> Result<bool> {
    let q = field.q();
    let n = v.ambient();
    let lhs = apply_a(field, &theta(field, v)?)?;
    let qa = apply_a(field, v)?.scale_int(&BigInt::from(q));
    let rhs = v.embed().scale_int(&q_pow(q, n as u64)).checked_add(&theta(field, &qa)?)?;
    Ok(lhs == rhs)
}

/// `A′_q(n)(θ_n X) = U_{n+1} θ_n X + q^k (D_{n+1} θ_n X - q^{n-k} X)` built
/// directly from the up and down operators, `k = dim X`.
pub fn a_prime_on_lift(field: &Field, x: &Subspace) -> Result<FormalVector> {
    let q = field.q();
    let n = x.ambient();
    let k = x.dim();
    let tx = theta(field, &FormalVector::delta(field.params(), x.clone()))?;
    let dx = down(field, &tx)?;
    let correction = FormalVector::delta(field.params(), x.embed()).scale_int(&q_pow(q, (n - k) as u64));
    let dprime = dx.checked_sub(&correction)?;
    up(field, &tx)?.checked_add(&dprime.scale_int(&q_pow(q, k as u64)))
}

/// `A′_q(n)` preserves `W(0)` and its matrix on `{θ_n(X)}` is `q M_q(n)`.
pub fn a_prime_matches_scaled_mq(field: &Field, n: usize) -> Result<bool> {
    let q = BigInt::from(field.q());
    for x in Lattice::new(field, n, DEFAULT_CAP)?.subspaces() {
        let got = a_prime_on_lift(field, x)?;
        let Some(pre) = theta_preimage(field, &got)? else {
            return Ok(false);
        };
        let expected = apply_a(field, &FormalVector::delta(field.params(), x.clone()))?.scale_int(&q);
        if pre != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Both θ identities on every top-level basis vector.
pub fn structural_identities_on_basis(basis: &EigenBasis, exec: Exec) -> Result<bool> {
    let field = basis.field();
    let results = exec.map(basis.vectors(), |ev| -> Result<bool> {
        Ok(embedding_identity_holds(field, &ev.vector)? && lift_identity_holds(field, &ev.vector)?)
    });
    results.into_iter().try_fold(true, |acc, r| Ok(acc && r?))
}

/// For every nontrivial `χ` of `H(n+1)`, `#{Y ∈ B_q(n,j) : p(χ)(Ŷ) ≠ 0} = [n-1, j]_q`,
/// so the total is `G_q(n-1)`.
pub fn w_dimension_law_holds(field: &Field, n: usize, exec: Exec) -> Result<bool> {
    let q = field.q();
    let chars = nontrivial_characters(field, n);
    let results = exec.map(&chars, |chi| -> Result<bool> {
        let counts = nonzero_projection_counts(field, chi)?;
        let per_rank = counts
            .iter()
            .enumerate()
            .all(|(j, &c)| BigInt::from(c) == q_binomial(q, n as i64 - 1, j as i64));
        let total: u64 = counts.iter().sum();
        Ok(per_rank && BigInt::from(total) == galois_number(q, n as u64 - 1))
    });
    results.into_iter().try_fold(true, |acc, r| Ok(acc && r?))
}
