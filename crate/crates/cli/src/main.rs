//! `charconj`: normalized characters, colored-pair polynomials, and
//! verification campaigns from the command line.
//!
//! Exit status: 0 on success or a passing campaign, 1 on usage and parse
//! errors, 2 when a campaign finds a mismatch.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub const EXIT_USAGE: u8 = 1;
pub const EXIT_MISMATCH: u8 = 2;
const THREADS_ENV: &str = "CHARCONJ_THREADS";

#[derive(Parser, Debug)]
#[command(
    name = "charconj",
    version,
    about = "Symmetric-group characters on rectangle-union shapes"
)]
pub struct Cli {
    /// Output format; `verify` defaults to json, everything else to text.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Worker threads (default: CHARCONJ_THREADS, then the number of CPUs).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Character value χ^λ(ν).
    Char {
        /// Shape λ, comma separated (e.g. 2,2).
        #[arg(long)]
        lambda: String,
        /// Cycle type ν, comma separated.
        #[arg(long)]
        nu: String,
    },
    /// Normalized character (n)_k χ^λ(μ,1^{n-k}) / f^λ.
    Fhat {
        /// Shape λ, comma separated.
        #[arg(long, conflicts_with = "shape", required_unless_present = "shape")]
        lambda: Option<String>,
        /// Shape as stacked rectangles, e.g. 2x3,1x1 (heights x widths).
        #[arg(long)]
        shape: Option<String>,
        /// Class μ, comma separated.
        #[arg(long)]
        mu: String,
    },
    /// The colored-pair polynomial G_μ in m colors.
    Gpoly {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        m: usize,
        /// Print (-1)^k G_μ(p, -q) instead.
        #[arg(long)]
        signed: bool,
    },
    /// F_k by coefficient extraction at x = ∞.
    Fk {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
    },
    /// F_μ reconstructed by interpolating character values.
    Interp {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        m: usize,
    },
    /// Run a verification campaign and print its report.
    Verify(VerifyArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Identity {
    Theorem1,
    Conjecture,
    Prop1,
    Reduction,
    Formula9,
    Oracles,
    Structure,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    identity: Identity,
    /// Largest |μ|.
    #[arg(long)]
    kmax: Option<usize>,
    /// Largest |μ| for the pointwise part of formula9.
    #[arg(long)]
    kgrid: Option<usize>,
    /// Number of colors / rectangles.
    #[arg(long)]
    m: Option<usize>,
    /// Largest number of colors.
    #[arg(long)]
    mmax: Option<usize>,
    /// Largest rectangle height and width on the grid.
    #[arg(long)]
    dim: Option<usize>,
    /// Single class for `reduction` (requires --m and --i).
    #[arg(long, requires_all = ["m", "i"])]
    mu: Option<String>,
    /// Merge index for `reduction`.
    #[arg(long)]
    i: Option<usize>,
    /// Largest n for the orthogonality check.
    #[arg(long)]
    nmax: Option<usize>,
    /// Largest n for the tableau-count check.
    #[arg(long)]
    ntableaux: Option<usize>,
    /// Compare polynomials (by interpolation) instead of values.
    #[arg(long)]
    polynomial: bool,
    /// Report elapsed_ms as 0 so output is byte-reproducible.
    #[arg(long)]
    no_timing: bool,
}

fn thread_count(flag: Option<usize>) -> Result<Option<usize>, String> {
    if flag.is_some() {
        return Ok(flag);
    }
    match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| format!("{THREADS_ENV} must be a positive integer, got {v:?}")),
        Err(_) => Ok(None),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let threads = match thread_count(cli.threads) {
        Ok(t) => t,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    if let Some(n) = threads.filter(|&n| n > 0) {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .expect("thread pool is configured once");
    }
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
