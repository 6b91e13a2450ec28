use std::collections::BTreeMap;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use qcube::eigenbasis::build_eigenbasis_with;
use qcube::operators::{build_mq_with, detailed_balance_holds};
use qcube::qarith::{binom2, galois_number, q_binomial, q_int, q_pow, pi_normalizer};
use qcube::spectra::{
    blocked_spectrum_check, kq_residual_is_zero, multiplicities_sum_to_galois, verify_spectrum_charpoly_in, DENSE_CAP,
};
use qcube::trees::{
    hypercube_tree_count, rooted_count_via_enumeration_in, rooted_count_via_minors_in, tree_weight_formula,
    ENUMERATION_MAX_N,
};
use qcube::{Exec, IntMatrix, Lattice};

use crate::commands::run_basis_checks;
use crate::config::{RunConfig, EIGENBASIS_CHECKS};
use crate::claims::CLAIMS;
use crate::Failure;

const FULL_GRID: &[(u64, &[usize])] = &[(2, &[1, 2, 3, 4]), (3, &[1, 2, 3]), (4, &[1, 2]), (5, &[1, 2])];
const QUICK_GRID: &[(u64, &[usize])] = &[(2, &[1, 2]), (3, &[1, 2])];
const RANDOM_TRIALS: usize = 20;

type Outcomes = Vec<(&'static str, bool)>;

/// `<Mu, v> = <u, Mv>` with integer weights `q^C(k,2)` on random integer vectors.
fn self_adjoint_trials(lattice: &Lattice, m: &IntMatrix, rng: &mut ChaCha8Rng) -> bool {
    let q = lattice.field().q();
    let w: Vec<BigInt> = lattice.subspaces().iter().map(|x| q_pow(q, binom2(x.dim() as u64))).collect();
    let pair = |a: &[BigInt], b: &[BigInt]| -> BigInt { a.iter().zip(b).zip(&w).map(|((x, y), w)| x * y * w).sum() };
    (0..RANDOM_TRIALS).all(|_| {
        let mut draw = || -> Vec<BigInt> { (0..lattice.len()).map(|_| BigInt::from(rng.random_range(-9i64..=9))).collect() };
        let u = draw();
        let v = draw();
        pair(&m.mul_vec(&u), &v) == pair(&u, &m.mul_vec(&v))
    })
}

fn cell(q: u64, n: usize, seed: u64, exec: Exec) -> qcube::Result<Outcomes> {
    let mut out: Outcomes = Vec::new();
    let field = qcube::Field::new(q)?;
    let nn = n as u64;
    let weighted: BigInt = (0..=nn).map(|k| q_pow(q, binom2(k)) * q_binomial(q, n as i64, k as i64)).sum();
    out.push(("q-counting", multiplicities_sum_to_galois(q, n) && weighted == pi_normalizer(q, nn)));

    let lattice = Lattice::new(&field, n, qcube::subspaces::DEFAULT_CAP)?;
    let m = build_mq_with(&lattice, exec);
    out.push(("row-sums", m.row_sums().iter().all(|s| *s == q_int(q, nn))));
    out.push(("detailed-balance", detailed_balance_holds(&lattice, &m)));
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (q << 32) ^ nn);
    out.push(("self-adjoint", self_adjoint_trials(&lattice, &m, &mut rng)));

    let dense = galois_number(q, nn) <= BigInt::from(DENSE_CAP);
    if dense {
        out.push(("spectrum", verify_spectrum_charpoly_in(&field, n)?));
    }
    out.push(("q-kac", (0..=n).all(|k| kq_residual_is_zero(q, n, k))));
    out.push(("blocked-spectrum", blocked_spectrum_check(q, n)));

    let basis = build_eigenbasis_with(&field, n, qcube::subspaces::DEFAULT_CAP, exec)?;
    let wanted: Vec<String> = EIGENBASIS_CHECKS.iter().map(|s| s.to_string()).collect();
    let checks = run_basis_checks(&basis, &wanted, exec)?;
    out.push(("eigenbasis", checks["residuals"] && basis.level(n).len() == lattice.len()));
    out.push(("orthogonality", checks["orthogonality"]));
    out.push(("norms", checks["norms"]));
    out.push(("coordinates", checks["coordinates"]));
    out.push(("conjugate-flip", checks["flip"]));
    out.push(("closed-form", checks["closed-form"]));
    out.push(("radial", checks["radial"]));
    out.push(("structural", checks["identities"]));

    let formula = tree_weight_formula(q, n)?;
    if dense {
        out.push(("trees-minors", rooted_count_via_minors_in(&field, n, exec)? == formula));
    }
    if n <= ENUMERATION_MAX_N {
        out.push(("trees-enumeration", rooted_count_via_enumeration_in(&field, n)? == formula));
    }
    Ok(out)
}

pub fn run(cfg: &RunConfig) -> Result<(), Failure> {
    let grid = if cfg.quick { QUICK_GRID } else { FULL_GRID };
    let cells: Vec<(u64, usize)> = grid.iter().flat_map(|(q, ns)| ns.iter().map(move |&n| (*q, n))).collect();
    let exec = Exec::default();
    let results: Vec<((u64, usize), qcube::Result<Outcomes>)> =
        cells.par_iter().map(|&(q, n)| ((q, n), cell(q, n, cfg.seed, exec))).collect();

    let mut tally: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    let mut all_ok = true;
    for ((q, n), r) in &results {
        match r {
            Ok(outs) => {
                let bad: Vec<&str> = outs.iter().filter(|(_, ok)| !ok).map(|(c, _)| *c).collect();
                for (claim, ok) in outs {
                    let e = tally.entry(claim).or_default();
                    e.0 += usize::from(*ok);
                    e.1 += 1;
                }
                if bad.is_empty() {
                    println!("q={q} n={n}: {} checks passed", outs.len());
                } else {
                    all_ok = false;
                    println!("q={q} n={n}: FAILED {}", bad.join(", "));
                }
            }
            Err(e) => {
                all_ok = false;
                println!("q={q} n={n}: ERROR {e}");
            }
        }
    }
    let hyper = (1..=6).all(|n| tree_weight_formula(1, n).is_ok_and(|f| f == hypercube_tree_count(n)));
    tally.insert("trees-hypercube", (usize::from(hyper), 1));
    all_ok &= hyper;

    println!();
    let width = CLAIMS.iter().map(|c| c.id.len()).max().unwrap_or(0);
    for c in CLAIMS {
        let (pass, total) = tally.get(c.id).copied().unwrap_or((0, 0));
        let status = if total == 0 {
            all_ok = false;
            "UNCOVERED"
        } else if pass == total {
            "PASS"
        } else {
            "FAIL"
        };
        println!("{:width$}  {pass:>2}/{total:<2}  {status}  {}", c.id, c.statement);
    }
    if all_ok {
        println!("selftest: all checks passed");
        Ok(())
    } else {
        Err(Failure::Verification("selftest".into()))
    }
}
