//! The `braidrep` command-line tool.
//!
//! Exit codes: 0 on success (including lemma failures, which are findings),
//! 2 on usage errors, 3 when the input is not a valid representation.

mod commands;
mod repfile;

use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub use commands::{analyze, build, certify, dot, graph_json};
pub use repfile::{AnyRep, RepFile};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("invalid representation: {0}")]
    InvalidRep(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::InvalidRep(_) => 3,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "braidrep", version, about = "Exact analysis of braid group representations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Burau,
    BurauReduced,
    Tym,
    Chi,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a standard representation and write it to a file.
    Build(BuildArgs),
    /// Verify a representation file and report its invariants.
    Analyze(AnalyzeArgs),
    /// Print the arithmetic certificate for one `n` or a range.
    Certify(CertifyArgs),
}

#[derive(Debug, clap::Args)]
pub struct BuildArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long)]
    pub n: usize,
    /// Character value for `chi`; for other families, twist by `chi(y)`.
    #[arg(long, allow_hyphen_values = true)]
    pub y: Option<String>,
    /// Substitute `t = P`, e.g. `t=2` or `t=-1/3`.
    #[arg(long, allow_hyphen_values = true)]
    pub specialize: Option<String>,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, clap::Args)]
pub struct AnalyzeArgs {
    pub file: PathBuf,
    /// Write the friendship graph as DOT.
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Write the friendship tables as JSON.
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// `all` or a comma-separated list of lemma ids.
    #[arg(long)]
    pub lemmas: Option<String>,
    #[arg(long)]
    pub reduce: bool,
    #[arg(long)]
    pub chain: bool,
    /// Treat the representation as irreducible without checking.
    #[arg(long)]
    pub assume_irreducible: bool,
}

#[derive(Debug, clap::Args)]
#[group(skip)]
#[command(group(clap::ArgGroup::new("target").required(true).args(["n", "range"])))]
pub struct CertifyArgs {
    #[arg(long)]
    pub n: Option<usize>,
    /// Inclusive range `A..B`.
    #[arg(long)]
    pub range: Option<String>,
    /// Print JSON lines instead of text.
    #[arg(long)]
    pub jsonl: bool,
}

/// Parse `A..B` (inclusive) or `A..=B`.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, CliError> {
    let bad = || CliError::Usage(format!("malformed range `{s}` (expected A..B)"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok(a..=b)
}

pub fn run(cli: Cli, out: &mut dyn std::io::Write) -> Result<(), CliError> {
    match cli.command {
        Command::Build(args) => build(&args, out),
        Command::Analyze(args) => analyze(&args, out),
        Command::Certify(args) => certify(&args, out),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("7..14").unwrap(), 7..=14);
        assert_eq!(parse_range("7..=14").unwrap(), 7..=14);
        for bad in ["7", "a..3", "9..3", "..4"] {
            assert_eq!(parse_range(bad).unwrap_err().exit_code(), 2);
        }
    }
}
