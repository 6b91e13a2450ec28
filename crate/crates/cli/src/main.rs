//! `qcube`: build and verify the q-analogue n-cube artifacts from the command line.
//!
//! Exit codes: 0 success, 1 a requested verification failed, 2 invalid input
//! or a size cap was exceeded.

mod claims;
mod commands;
mod config;
mod selftest;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::config::RunConfig;

#[derive(Parser, Debug)]
#[command(name = "qcube", version, about = "Exact spectra, eigenbases and tree counts of the q-analogue n-cube")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Eigenvalues and multiplicities of M_q(n).
    Spectrum(Opts),
    /// The recursive eigenbasis of M_q(n).
    Eigenbasis(Opts),
    /// Weighted rooted spanning tree counts of the Hasse diagram.
    Trees(Opts),
    /// Run the invariant suite over a grid of (q, n).
    Selftest(Opts),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    /// Matrix Market, with a JSON index file next to it
    Mm,
}

#[derive(Args, Debug, Clone)]
pub struct Opts {
    /// Field order (a prime power).
    #[arg(long)]
    pub q: Option<u64>,
    /// Ambient dimension.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
    /// Comma-separated verifications, or `all`.
    #[arg(long, value_delimiter = ',')]
    pub verify: Vec<String>,
    /// Comma-separated independent oracles, or `all`.
    #[arg(long, value_delimiter = ',')]
    pub oracle: Vec<String>,
    /// Refuse lattices with more than this many subspaces.
    #[arg(long, env = "QCUBE_CAP")]
    pub cap: Option<u128>,
    /// Accept q = 1 (tree formula only).
    #[arg(long)]
    pub allow_q1: bool,
    /// Seed for the randomized checks.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Smaller selftest grid.
    #[arg(long)]
    pub quick: bool,
    /// Print the claim-to-test table and exit.
    #[arg(long)]
    pub paper_map: bool,
    /// TOML file with `field.modulus` and `caps.galois`.
    #[arg(long)]
    pub config: Option<std::path::PathBuf>,
}

/// Why a command did not succeed.
#[derive(Debug)]
pub enum Failure {
    Input(String),
    Verification(String),
}

impl From<qcube::Error> for Failure {
    fn from(e: qcube::Error) -> Self {
        match e {
            qcube::Error::Invariant(_) => Failure::Verification(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, opts) = match &cli.command {
        Command::Spectrum(o) => ("spectrum", o),
        Command::Eigenbasis(o) => ("eigenbasis", o),
        Command::Trees(o) => ("trees", o),
        Command::Selftest(o) => ("selftest", o),
    };
    if opts.paper_map {
        print!("{}", claims::render());
        return ExitCode::SUCCESS;
    }
    let result = RunConfig::from_opts(name, opts).and_then(|cfg| match cli.command {
        Command::Spectrum(_) => commands::spectrum(&cfg),
        Command::Eigenbasis(_) => commands::eigenbasis(&cfg),
        Command::Trees(_) => commands::trees(&cfg),
        Command::Selftest(_) => selftest::run(&cfg),
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("qcube: verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("qcube: {msg}");
            ExitCode::from(2)
        }
    }
}
