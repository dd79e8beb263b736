//! `gcq`: batch front end for the Gelfand–Cetlin toolkit.
//!
//! Exit codes: 0 success/agree, 1 mismatch or invariant violation,
//! 2 parse or argument error, 3 numerical failure, 4 capacity exceeded.

mod commands;
mod sample;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gcq_core::polytope::DEFAULT_CAP;
use gcq_core::Error;

#[derive(Debug, Parser)]
#[command(name = "gcq", version, about = "Gelfand-Cetlin systems on T*U(n)")]
struct Cli {
    #[command(flatten)]
    config: Config,

    #[command(subcommand)]
    command: Command,
}

/// Settings shared by every subcommand.
#[derive(Debug, Clone, Args)]
pub struct Config {
    /// Seed for the ChaCha20 generator behind all sampling.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Numerical tolerance for invariant checks.
    #[arg(long, global = true, default_value_t = 1e-8)]
    pub tol: f64,

    /// Largest enumeration that will be materialized.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub cap: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variant {
    Strict,
    Closure,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the Gelfand-Cetlin vector of a Hermitian matrix (JSON file).
    GcMap { matrix: PathBuf },
    /// Print the diagonal matrix of the sorted spectrum.
    Sweep { matrix: PathBuf },
    /// Enumerate Bohr-Sommerfeld points with |alpha_i| <= max.
    Bs {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max: i64,
        #[arg(long, value_enum, default_value_t = Variant::Closure)]
        variant: Variant,
    },
    /// Truncated Peter-Weyl check; exits 1 on mismatch.
    Pw {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max: i64,
    },
    /// Weyl dimension and GC lattice-point count of a weight "a1,a2,...".
    Dim {
        #[arg(allow_hyphen_values = true)]
        weight: String,
    },
    /// Check the double GC invariants on seeded random cotangent points.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Perturb the dual spectrum to confirm violations are reported.
        #[arg(long)]
        inject_asymmetry: bool,
    },
}

/// What a command produced: text for stdout and whether the check it ran
/// came out clean.
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Parse(_) | Error::Domain(_) => 2,
        Error::NoConvergence { .. } => 3,
        Error::Capacity { .. } => 4,
    }
}

fn configure_threads() -> Result<(), Error> {
    let Ok(raw) = std::env::var("GCQ_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw.parse().ok().filter(|&t| t > 0).ok_or_else(|| {
        Error::Parse(format!(
            "GCQ_THREADS must be a positive integer, got {raw:?}"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Error::Domain(e.to_string()))
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    let config = cli.config;
    if config.tol.is_nan() || config.tol < 0.0 {
        return Err(Error::Parse("--tol must be non-negative".into()));
    }
    if config.cap == 0 {
        return Err(Error::Parse("--cap must be at least 1".into()));
    }
    configure_threads()?;
    match cli.command {
        Command::GcMap { matrix } => commands::gc_map(&matrix, &config),
        Command::Sweep { matrix } => commands::sweep(&matrix, &config),
        Command::Bs { n, max, variant } => {
            let variant = match variant {
                Variant::Strict => gcq_core::BSVariant::StrictRegular,
                Variant::Closure => gcq_core::BSVariant::Closure,
            };
            commands::bs(n, max, variant, &config)
        }
        Command::Pw { n, max } => commands::pw(n, max, &config),
        Command::Dim { weight } => commands::dim(&weight, &config),
        Command::Sample {
            n,
            count,
            inject_asymmetry,
        } => sample::run(n, count, inject_asymmetry, &config),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("gcq: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
