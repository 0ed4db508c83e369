//! Command-line front end.
//!
//! Exit codes: 0 success or true, 1 mathematically false (non-member,
//! criterion fails, certificate rejected), 2 input error, 3 budget exceeded.

pub mod bundle;
mod commands;
pub mod parse;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::groebner::{BuchbergerConfig, Strategy, DEFAULT_BUDGET};
use crate::order::OrderKind;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Lex,
    Grlex,
    Grevlex,
}

impl From<OrderArg> for OrderKind {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Lex => OrderKind::Lex,
            OrderArg::Grlex => OrderKind::GrLex,
            OrderArg::Grevlex => OrderKind::GrevLex,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    #[default]
    Normal,
    Fifo,
}

#[derive(Debug, Parser)]
#[command(name = "gbcert", version, about = "Exact Groebner bases with checkable certificates")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Debug, Args)]
pub struct GlobalOpts {
    /// Problem file (or bundle for `cert verify`); stdin when absent.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Monomial order; overrides the file header. Defaults to lex.
    #[arg(long, global = true, value_enum)]
    pub order: Option<OrderArg>,
    /// Variable precedence, e.g. `x2,x0,x1`, or names in precedence order.
    #[arg(long, global = true, value_delimiter = ',')]
    pub vars: Option<Vec<String>>,
    /// Reject variables not in the `--vars` list.
    #[arg(long, global = true)]
    pub strict: bool,
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write a certificate bundle to this path.
    #[arg(long, global = true)]
    pub cert_out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = StrategyArg::Normal)]
    pub strategy: StrategyArg,
    /// Skip S-pairs with coprime leading monomials.
    #[arg(long, global = true)]
    pub coprime_skip: bool,
    /// Maximum number of S-pair reductions.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: usize,
}

impl GlobalOpts {
    pub fn config(&self) -> BuchbergerConfig {
        BuchbergerConfig {
            strategy: match self.strategy {
                StrategyArg::Normal => Strategy::Normal,
                StrategyArg::Fifo => Strategy::Fifo,
            },
            coprime_skip: self.coprime_skip,
            budget: self.budget,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Groebner basis computation and checking.
    #[command(subcommand)]
    Gb(GbCommand),
    /// Divide each query polynomial by the generators, in order.
    Divide,
    /// Ideal membership of each query polynomial.
    Member {
        /// Use the basis from a certificate bundle instead of computing one.
        #[arg(long)]
        bundle: Option<PathBuf>,
    },
    /// S-polynomial of two polynomials (the query, or else the generators).
    Spoly,
    #[command(subcommand)]
    Cert(CertCommand),
    #[command(subcommand)]
    Embed(EmbedCommand),
    #[command(subcommand)]
    Liminf(LiminfCommand),
}

#[derive(Debug, Subcommand)]
pub enum GbCommand {
    /// Reduced Groebner basis of the generators.
    Compute,
    /// Whether the generators already form a Groebner basis.
    Check,
}

#[derive(Debug, Subcommand)]
pub enum CertCommand {
    /// Check a certificate bundle without recomputing anything.
    Verify {
        /// Bundle path; falls back to `--input`, then stdin.
        path: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum EmbedCommand {
    /// Transport bases and remainders along `x_i ↦ x_{i+k}` and compare.
    Check {
        #[arg(long, default_value_t = 5)]
        shift: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum LiminfCommand {
    /// Reduced bases of the prefix contractions and their liminf.
    Demo {
        /// Ascending prefix sizes; defaults to 1..=v+2 for v variables.
        #[arg(long, value_delimiter = ',')]
        prefixes: Option<Vec<usize>>,
    },
}

/// Runs the CLI in-process and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(rendered.as_bytes()) } else { stdout.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match commands::dispatch(&cli, stdin, stdout) {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(stderr, "error: {}", failure.message);
            failure.code
        }
    }
}
