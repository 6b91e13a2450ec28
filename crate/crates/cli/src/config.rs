use std::path::{Path, PathBuf};

use serde::Deserialize;

use qcube::subspaces::DEFAULT_CAP;
use qcube::{Error, Field};

use crate::{Failure, Format, Opts};

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    #[serde(default)]
    field: FieldSection,
    #[serde(default)]
    caps: CapsSection,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FieldSection {
    /// Coefficients, constant term first.
    modulus: Option<Vec<u32>>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct CapsSection {
    galois: Option<u128>,
}

/// Validated settings for one invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub q: Option<u64>,
    pub n: Option<usize>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub verify: Vec<String>,
    pub oracle: Vec<String>,
    pub cap: u128,
    pub allow_q1: bool,
    pub seed: u64,
    pub quick: bool,
    pub modulus: Option<Vec<u32>>,
}

fn load(path: &Path) -> Result<FileConfig, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read config {}: {e}", path.display())))?;
    toml::from_str(&text).map_err(|e| Failure::Input(format!("bad config {}: {e}", path.display())))
}

fn expand(list: &[String], known: &[&str], what: &str) -> Result<Vec<String>, Failure> {
    if list.iter().any(|s| s == "all") {
        return Ok(known.iter().map(|s| s.to_string()).collect());
    }
    for s in list {
        if !known.contains(&s.as_str()) {
            return Err(Failure::Input(format!("unknown {what} `{s}`; expected one of {} or all", known.join(", "))));
        }
    }
    Ok(list.to_vec())
}

pub const SPECTRUM_CHECKS: &[&str] = &["charpoly", "kac", "blocked"];
pub const EIGENBASIS_CHECKS: &[&str] =
    &["residuals", "orthogonality", "norms", "coordinates", "flip", "closed-form", "radial", "identities"];
pub const TREE_ORACLES: &[&str] = &["minors", "enumeration"];

impl RunConfig {
    pub fn from_opts(command: &'static str, o: &Opts) -> Result<Self, Failure> {
        let file = match &o.config {
            Some(p) => load(p)?,
            None => FileConfig::default(),
        };
        let cap = o.cap.or(file.caps.galois).unwrap_or(DEFAULT_CAP);
        if cap == 0 {
            return Err(Failure::Input("cap must be positive".into()));
        }
        let (verify, oracle) = match command {
            "spectrum" => (expand(&o.verify, SPECTRUM_CHECKS, "verification")?, expand(&o.oracle, &[], "oracle")?),
            "eigenbasis" => (expand(&o.verify, EIGENBASIS_CHECKS, "verification")?, expand(&o.oracle, &[], "oracle")?),
            "trees" => (expand(&o.verify, &[], "verification")?, expand(&o.oracle, TREE_ORACLES, "oracle")?),
            _ => (Vec::new(), Vec::new()),
        };
        let cfg = RunConfig {
            q: o.q,
            n: o.n,
            format: o.format,
            out: o.out.clone(),
            verify,
            oracle,
            cap,
            allow_q1: o.allow_q1,
            seed: o.seed,
            quick: o.quick,
            modulus: file.field.modulus,
        };
        if command != "selftest" {
            if cfg.q.is_none() || cfg.n.is_none() {
                return Err(Failure::Input(format!("{command} needs --q and --n")));
            }
            let q = cfg.q.unwrap();
            if q == 1 && !(command == "trees" && cfg.allow_q1) {
                return Err(Failure::Input("q = 1 is accepted only by `trees --allow-q1`".into()));
            }
            if q != 1 {
                qcube::QParams::new(q)?;
            }
        }
        Ok(cfg)
    }

    pub fn q(&self) -> u64 {
        self.q.expect("checked at construction")
    }

    pub fn n(&self) -> usize {
        self.n.expect("checked at construction")
    }

    /// `F_q`, honouring a configured modulus.
    pub fn field(&self, q: u64) -> Result<Field, Failure> {
        let f = match &self.modulus {
            Some(m) if qcube::QParams::new(q)?.m > 1 => Field::with_modulus(q, m.clone()),
            _ => Field::new(q),
        };
        f.map_err(|e| match e {
            Error::MissingModulus(_) => {
                Failure::Input(format!("{e} via --config"))
            }
            other => other.into(),
        })
    }

    pub fn wants(&self, check: &str) -> bool {
        self.verify.iter().any(|c| c == check) || self.oracle.iter().any(|c| c == check)
    }
}
