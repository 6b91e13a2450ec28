use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use serde_json::{json, Value};

use qcube::eigenbasis::{
    a_prime_matches_scaled_mq, basis_matches_spectrum, build_eigenbasis_with, classical_eigenvector,
    classical_indices, conjugate_flip_holds, coordinate_laws_hold, eigen_residuals_vanish, norm_recursions_hold,
    radial_in_span, structural_identities_on_basis, verify_orthogonality, w_dimension_law_holds, EigenBasis,
};
use qcube::operators::{build_mq_with, matrix_market_with_index, radial_vector};
use qcube::spectra::{blocked_spectrum_check, kq_residual_is_zero, spectrum as closed_spectrum, verify_spectrum_charpoly_in};
use qcube::subspaces::check_cap;
use qcube::trees::{directed_laplacian_in, tree_count_report_in, ENUMERATION_MAX_N};
use qcube::{Exec, Field, FormalVector, Lattice};

use crate::config::RunConfig;
use crate::{Failure, Format};

fn io_err(path: &Path, e: std::io::Error) -> Failure {
    Failure::Input(format!("cannot write {}: {e}", path.display()))
}

/// Writes `text` to `--out`, or stdout.
pub fn emit(cfg: &RunConfig, text: &str) -> Result<(), Failure> {
    match &cfg.out {
        Some(p) => std::fs::write(p, text).map_err(|e| io_err(p, e)),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| Failure::Input(format!("stdout: {e}")))
        }
    }
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

/// Writes the Matrix Market file to `--out` and its index to `<out>.index.json`.
fn emit_mm(cfg: &RunConfig, lattice: &Lattice, m: &qcube::IntMatrix) -> Result<(), Failure> {
    let Some(out) = &cfg.out else {
        return Err(Failure::Input("--format mm needs --out (the index is written beside it)".into()));
    };
    let (mm, index) = matrix_market_with_index(lattice, m);
    std::fs::write(out, mm).map_err(|e| io_err(out, e))?;
    let mut ip = out.clone().into_os_string();
    ip.push(".index.json");
    let ip = std::path::PathBuf::from(ip);
    std::fs::write(&ip, json_text(&index)).map_err(|e| io_err(&ip, e))
}

fn failed(checks: &BTreeMap<String, bool>) -> Result<(), Failure> {
    let bad: Vec<&str> = checks.iter().filter(|(_, ok)| !**ok).map(|(k, _)| k.as_str()).collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(bad.join(", ")))
    }
}

pub fn spectrum(cfg: &RunConfig) -> Result<(), Failure> {
    let (q, n) = (cfg.q(), cfg.n());
    let mut report = closed_spectrum(q, n);
    let mut checks = BTreeMap::new();
    let needs_field = cfg.wants("charpoly") || cfg.format == Format::Mm;
    let field = if needs_field { Some(cfg.field(q)?) } else { None };
    if cfg.wants("charpoly") {
        check_cap(q, n, cfg.cap)?;
        let ok = verify_spectrum_charpoly_in(field.as_ref().unwrap(), n)?;
        report.charpoly_verified = ok;
        checks.insert("charpoly".to_string(), ok);
    }
    if cfg.wants("kac") {
        checks.insert("kac".into(), (0..=n).all(|k| kq_residual_is_zero(q, n, k)));
    }
    if cfg.wants("blocked") {
        checks.insert("blocked".into(), blocked_spectrum_check(q, n));
    }
    match cfg.format {
        Format::Json => {
            let mut v = serde_json::to_value(&report).expect("report serializes");
            if !checks.is_empty() {
                v["checks"] = json!(checks);
            }
            emit(cfg, &json_text(&v))?;
        }
        Format::Csv => emit(cfg, &report.to_csv())?,
        Format::Mm => {
            let field = field.as_ref().unwrap();
            let lattice = Lattice::new(field, n, cfg.cap)?;
            emit_mm(cfg, &lattice, &build_mq_with(&lattice, Exec::default()))?;
        }
    }
    failed(&checks)
}

/// The closed-form vectors agree with the recursion at level `n`.
fn closed_form_matches(basis: &EigenBasis) -> qcube::Result<bool> {
    let n = basis.n();
    for alpha in classical_indices(n) {
        let v = classical_eigenvector(basis.field(), &alpha)?;
        if Some(&v) != basis.get(n, &alpha).map(|e| &e.vector) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Each radial vector is recovered from its solved expansion.
fn radial_recombines(field: &Field, n: usize) -> qcube::Result<bool> {
    let Some(span) = radial_in_span(field, n)? else {
        return Ok(false);
    };
    for k in 0..=n {
        let mut acc = FormalVector::zero(field.params(), n);
        for (alpha, c) in span.indices.iter().zip(&span.radial[k]) {
            acc = acc.checked_add(&classical_eigenvector(field, alpha)?.scale_rational(c))?;
        }
        if acc != radial_vector(field, n, k)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn run_basis_checks(basis: &EigenBasis, wanted: &[String], exec: Exec) -> qcube::Result<BTreeMap<String, bool>> {
    let field = basis.field();
    let n = basis.n();
    let mut checks = BTreeMap::new();
    for name in wanted {
        let ok = match name.as_str() {
            "residuals" => eigen_residuals_vanish(basis, exec)? && basis_matches_spectrum(basis),
            "orthogonality" => verify_orthogonality(basis, exec)?,
            "norms" => norm_recursions_hold(basis)?,
            "coordinates" => coordinate_laws_hold(basis)?,
            "flip" => conjugate_flip_holds(basis)?,
            "closed-form" => closed_form_matches(basis)?,
            "radial" => radial_recombines(field, n)?,
            "identities" => {
                structural_identities_on_basis(basis, exec)?
                    && a_prime_matches_scaled_mq(field, n)?
                    && w_dimension_law_holds(field, n, exec)?
            }
            other => return Err(qcube::Error::InvalidArgument(format!("unknown check {other}"))),
        };
        checks.insert(name.clone(), ok);
    }
    Ok(checks)
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn eigenbasis(cfg: &RunConfig) -> Result<(), Failure> {
    let (q, n) = (cfg.q(), cfg.n());
    if cfg.format == Format::Mm {
        return Err(Failure::Input("--format mm applies to spectrum and trees".into()));
    }
    check_cap(q, n, cfg.cap)?;
    let field = cfg.field(q)?;
    let exec = Exec::default();
    let lattice = Lattice::new(&field, n, cfg.cap)?;
    let basis = build_eigenbasis_with(&field, n, cfg.cap, exec)?;
    let checks = run_basis_checks(&basis, &cfg.verify, exec)?;
    match cfg.format {
        Format::Json => {
            let subspaces: Vec<Value> = lattice.subspaces().iter().map(|x| x.to_json(&field)).collect();
            let v = json!({
                "q": q,
                "n": n,
                "modulus": field.modulus(),
                "subspaces": subspaces,
                "vectors": basis.to_json(&lattice)?,
                "checks": checks,
            });
            emit(cfg, &json_text(&v))?;
        }
        Format::Csv => {
            let mut s = String::from("alpha,k,lambda,subspace_index,value\n");
            for ev in basis.vectors() {
                let alpha = csv_field(&ev.alpha.to_string());
                for (x, c) in ev.vector.iter() {
                    let i = lattice.index_of(x).ok_or_else(|| Failure::Verification("vector leaves the lattice".into()))?;
                    s.push_str(&format!("{alpha},{},{},{i},{}\n", ev.k(), ev.lambda, csv_field(&c.to_string())));
                }
            }
            emit(cfg, &s)?;
        }
        Format::Mm => unreachable!(),
    }
    failed(&checks)
}

pub fn trees(cfg: &RunConfig) -> Result<(), Failure> {
    let (q, n) = (cfg.q(), cfg.n());
    if n == 0 {
        return Err(Failure::Input("the tree count needs n >= 1".into()));
    }
    let minors = cfg.wants("minors");
    let enumeration = cfg.wants("enumeration");
    if q == 1 && (minors || enumeration || cfg.format == Format::Mm) {
        return Err(Failure::Input("at q = 1 only the closed formula is available".into()));
    }
    if enumeration && n > ENUMERATION_MAX_N {
        return Err(Failure::Input(format!("the enumeration oracle supports n <= {ENUMERATION_MAX_N}")));
    }
    let field = if q == 1 {
        None
    } else {
        check_cap(q, n, cfg.cap)?;
        Some(cfg.field(q)?)
    };
    if cfg.format == Format::Mm {
        let field = field.as_ref().unwrap();
        let lattice = Lattice::new(field, n, cfg.cap)?;
        return emit_mm(cfg, &lattice, &directed_laplacian_in(field, n)?);
    }
    let report = tree_count_report_in(q, field.as_ref(), n, minors, enumeration, Exec::default())?;
    match cfg.format {
        Format::Json => emit(cfg, &json_text(&serde_json::to_value(&report).expect("report serializes")))?,
        Format::Csv => {
            let opt = |v: &Option<num_bigint::BigInt>| v.as_ref().map(ToString::to_string).unwrap_or_default();
            emit(
                cfg,
                &format!(
                    "q,n,formula,minors,enumeration,hypercube,agree\n{},{},{},{},{},{},{}\n",
                    report.q,
                    report.n,
                    report.formula,
                    opt(&report.minors),
                    opt(&report.enumeration),
                    opt(&report.hypercube),
                    report.agree()
                ),
            )?;
        }
        Format::Mm => unreachable!(),
    }
    if report.agree() {
        Ok(())
    } else {
        Err(Failure::Verification("tree counts disagree".into()))
    }
}
