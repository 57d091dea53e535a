//! `extremal`: generate recurrence sequences, enclose their limits, run the
//! Diophantine scans and emit certificates.
//!
//! Exit codes: 0 PASS, 1 FAIL, 2 INDETERMINATE, 3 usage or runtime error.

mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use config::RunConfig;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] extremal_core::Error),
    #[error("config: {0}")]
    Config(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

#[derive(Parser, Debug)]
#[command(name = "extremal", version, about = "Extremal real numbers from integer matrix recurrences")]
struct Cli {
    /// File of key=value settings.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Single setting override, key=value; may be repeated.
    #[arg(long = "set", global = true, value_name = "KEY=VALUE")]
    set: Vec<String>,
    /// Worker threads for the parallel scans.
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a sequence from a seed and write it as JSON.
    Generate {
        #[command(subcommand)]
        seed: SeedCmd,
    },
    /// Enclose ξ from a sequence file.
    Xi {
        #[arg(long)]
        seq: PathBuf,
        #[arg(long)]
        digits: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enclose the Fibonacci-word continued fraction, optionally against a sequence.
    Cf {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long)]
        digits: Option<u64>,
        /// Compare with ξ from this sequence file.
        #[arg(long)]
        seq: Option<PathBuf>,
    },
    /// Certify the four extremality conditions, the determinant relations and the matrix.
    Verify {
        #[arg(long)]
        seq: PathBuf,
        /// Inclusive 1-based range a:b.
        #[arg(long, default_value = "1:25")]
        range: String,
        #[arg(long, default_value_t = 10)]
        tail_from: usize,
        #[arg(long, default_value_t = 0.01)]
        tolerance: f64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Minimal points of ξ up to a norm bound.
    Minpoints {
        #[arg(long)]
        seq: PathBuf,
        #[arg(long)]
        xmax: Option<u64>,
        /// Match the records against the sequence terms.
        #[arg(long)]
        crosscheck: bool,
        /// Largest acceptable norm from which all records are matched.
        #[arg(long, default_value_t = 10)]
        n0_max: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Minimal polynomials of ξ up to a height bound, with their certificate.
    Minpoly {
        #[arg(long)]
        seq: PathBuf,
        #[arg(long)]
        hmax: Option<u64>,
        #[arg(long, default_value_t = 1e-3)]
        lo: f64,
        #[arg(long, default_value_t = 1e3)]
        hi: f64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Distances of y_{t,0}·ξ³ to the integers and their contraction.
    Cubicgap {
        #[arg(long)]
        seq: PathBuf,
        /// Number of terms; defaults to the whole file.
        #[arg(long)]
        count: Option<usize>,
        #[arg(long, default_value_t = 10)]
        factor: u32,
        #[arg(long, default_value_t = 1e-3)]
        min: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Best monic cubics and cubic algebraic integers at given heights.
    Cubic {
        #[arg(long)]
        seq: PathBuf,
        /// Comma-separated heights.
        #[arg(long, default_value = "50,100")]
        heights: String,
        #[arg(long, value_enum, default_value_t = commands::CubicMode::Both)]
        mode: commands::CubicMode,
        #[arg(long, default_value_t = 1e-3)]
        lo: f64,
        #[arg(long, default_value_t = 1e3)]
        hi: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Kernel of the derivative constraints on E(d, p), or a sweep over multi-degrees.
    Relations {
        /// Comma-separated multi-degree.
        #[arg(long, required_unless_present = "sweep_k")]
        d: Option<String>,
        /// Weight; defaults to |d|.
        #[arg(long)]
        p: Option<u32>,
        /// Validate the kernel on the windows of this sequence.
        #[arg(long)]
        seq: Option<PathBuf>,
        /// Sweep every multi-degree of length k+1 instead.
        #[arg(long, conflicts_with = "d")]
        sweep_k: Option<usize>,
        #[arg(long, default_value_t = 4)]
        sweep_total: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct GenOut {
    #[arg(long, default_value_t = 20)]
    terms: usize,
    #[arg(long, default_value = "sequence.json")]
    out: PathBuf,
}

#[derive(Subcommand, Debug)]
enum SeedCmd {
    /// A = [[a,1],[1,0]], B = [[b,1],[1,0]], M = AB.
    Fib {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[command(flatten)]
        out: GenOut,
    },
    /// M = [[a,1],[−1,0]], y1 = (1,1,0).
    Ex2 {
        #[arg(long)]
        a: u64,
        #[command(flatten)]
        out: GenOut,
    },
    /// Explicit seed: --matrix a,b,c,d --y1 x0,x1,x2 --y2 x0,x1,x2.
    Explicit {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[arg(long, allow_hyphen_values = true)]
        y1: String,
        #[arg(long, allow_hyphen_values = true)]
        y2: String,
        #[command(flatten)]
        out: GenOut,
    },
}

fn load_config(cli: &Cli) -> Result<RunConfig, CliError> {
    let mut cfg = match &cli.config {
        Some(p) => RunConfig::load(p)?,
        None => RunConfig::default(),
    };
    for s in &cli.set {
        cfg.apply(s, "--set")?;
    }
    if let Some(w) = cli.workers {
        cfg.workers = w;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn run(cli: Cli) -> Result<extremal_core::verify::Verdict, CliError> {
    let cfg = load_config(&cli)?;
    #[cfg(feature = "parallel")]
    if cfg.workers > 0 {
        // a pool may already exist when embedded; the setting is advisory
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cfg.workers).build_global();
    }
    commands::dispatch(cli.cmd, &cfg)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(v) => ExitCode::from(v.exit_code() as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
