//! Command-line grammar and the validated run configuration.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::CliError;

pub const DEFAULT_CACHE_DIR: &str = ".cherednik-cache";

#[derive(Parser, Debug, Clone)]
#[command(name = "cherednik", version, about = "Exact q,t-characters and modular Cherednik algebra computations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Directory holding kostka_n<N>.json cache files.
    #[arg(long, global = true, env = "CHEREDNIK_CACHE")]
    pub cache_dir: Option<PathBuf>,
    /// Worker threads; output does not depend on this.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Standard,
    Swapped,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ContractionArg {
    Columns,
    Rows,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Grevlex,
    Lex,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Pcenter,
    Dunkl,
    Pbw,
}

/// Fixed-point classes on the Hilbert scheme.
#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    /// The structure sheaf.
    Structure,
    /// The skyscraper at the fixed point `--mu`.
    Skyscraper,
    /// The isotypic Procesi component `P_lambda`.
    Procesi,
    /// The inverse BKR image of `s_lambda`.
    Bkr,
    /// The Frobenius pushforward of the line bundle `O(c~)`.
    FrobeniusLine,
    /// The normalized Frobenius class `f_c`.
    Fc,
    /// The splitting class `W_0`.
    W0,
    /// The splitting class `W_c`.
    Wc,
}

#[derive(Args, Debug, Clone)]
pub struct ClassArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum)]
    pub class: ClassArg,
    #[arg(long)]
    pub lambda: Option<String>,
    #[arg(long)]
    pub mu: Option<String>,
    #[arg(long)]
    pub p: Option<u64>,
    /// Exact rational `a/b` (or an integer).
    #[arg(long)]
    pub c: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    pub lift: Option<i64>,
    /// Use Frobenius-twisted Procesi restrictions and weights (needs `--p`).
    #[arg(long)]
    pub twisted: bool,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// The Kostka-Macdonald table for partitions of n.
    Kostka {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = ConventionArg::Standard)]
        convention: ConventionArg,
    },
    /// Fixed-point restrictions of a class.
    Fixedpoints(ClassArgs),
    /// The equivariant Euler characteristic of a class.
    Euler(ClassArgs),
    /// The bigraded character of the spherical simple module for lambda.
    Char {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        c: String,
        #[arg(long, allow_negative_numbers = true)]
        lift: Option<i64>,
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = ContractionArg::Columns)]
        contraction: ContractionArg,
    },
    /// Baby Verma module and its simple head.
    Verma {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        c: String,
        #[arg(long)]
        tau: String,
        #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
        order: OrderArg,
    },
    /// Self-check suites over F_p.
    Check {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        c: String,
        #[arg(long, value_enum)]
        suite: Suite,
        /// Degree bound; defaults to 12 for pcenter and 2p for relations.
        #[arg(long)]
        degree: Option<usize>,
        /// Random words for the pbw suite.
        #[arg(long, default_value_t = 200)]
        words: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// A validated invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub format: Format,
    pub cache_dir: PathBuf,
    pub threads: Option<usize>,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        if cli.threads == Some(0) {
            return Err(CliError::Usage("--threads must be positive".into()));
        }
        Ok(RunConfig {
            command: cli.command,
            format: cli.format,
            cache_dir: cli.cache_dir.unwrap_or_else(|| PathBuf::from(DEFAULT_CACHE_DIR)),
            threads: cli.threads,
        })
    }

    pub fn parse_from<I, T>(args: I) -> Result<Self, CliError>
    where
        I: IntoIterator<Item = T>,
        T: Into<std::ffi::OsString> + Clone,
    {
        let cli = Cli::try_parse_from(args).map_err(|e| CliError::Usage(e.to_string()))?;
        Self::from_cli(cli)
    }
}

/// Parses `a/b` or `a` exactly; decimals are rejected.
pub fn parse_rational(s: &str) -> Result<(i64, i64), CliError> {
    let bad = || CliError::Usage(format!("c must be an exact rational a/b, got {s:?}"));
    let (a, b) = match s.trim().split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s.trim(), "1"),
    };
    let a: i64 = a.parse().map_err(|_| bad())?;
    let b: i64 = b.parse().map_err(|_| bad())?;
    if b == 0 {
        return Err(CliError::Usage("c has a zero denominator".into()));
    }
    Ok(if b < 0 { (-a, -b) } else { (a, b) })
}
