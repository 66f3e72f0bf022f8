//! Command-line front end: `eval`, `params`, `accuracy-map`, `bench`,
//! `selftest`.
//!
//! [`run`] takes the argument list and two writers and returns the process
//! exit code, so the binary is a one-liner and tests drive it in memory.

pub mod accuracy;
pub mod bench;
pub mod grid;
pub mod reference;
pub mod selftest;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;

use crate::errlike::{evaluate, evaluate_real, FunctionKind};
use crate::tuning::{build_params, EvalParams};
use crate::DEPS;

pub use grid::GridSpec;

pub const EXIT_OK: i32 = 0;
pub const EXIT_SELFTEST_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DATA_MISMATCH: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "faddeeva-trapz", version, about = "Faddeeva and error-function evaluator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// w, imw, erf, erfc, erfcx, erfi or dawson
    #[arg(long = "fn", default_value = "w")]
    function: FunctionKind,
    /// Target relative accuracy
    #[arg(long, default_value_t = DEPS)]
    eps: f64,
    /// Asymptotic series for |z| > 30
    #[arg(long)]
    use_asymptotic: bool,
    /// Power series near the origin for the odd real functions
    #[arg(long)]
    use_maclaurin: bool,
    /// Replace the derived node spacing (debugging only)
    #[arg(long, allow_negative_numbers = true)]
    h_override: Option<f64>,
}

#[derive(Debug, Args)]
struct GridArgs {
    #[arg(long, default_value_t = -6.0, allow_negative_numbers = true)]
    re_min: f64,
    #[arg(long, default_value_t = 6.0, allow_negative_numbers = true)]
    re_max: f64,
    #[arg(long, default_value_t = -6.0, allow_negative_numbers = true)]
    im_min: f64,
    #[arg(long, default_value_t = 6.0, allow_negative_numbers = true)]
    im_max: f64,
    #[arg(long, default_value_t = 241)]
    nre: usize,
    #[arg(long, default_value_t = 241)]
    nim: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one function at one point
    Eval {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        re: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        im: f64,
    },
    /// Print the derived tuning constants
    Params {
        #[command(flatten)]
        common: Common,
    },
    /// Relative error over a grid against a high-precision reference CSV
    AccuracyMap {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long)]
        reference: PathBuf,
        /// Per-point CSV; stdout gets only the summary line when given
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time evaluations over a grid, bucketed by region
    Bench {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, default_value_t = 1)]
        repetitions: usize,
    },
    /// Identity checks that need no reference data
    Selftest {
        #[command(flatten)]
        common: Common,
    },
}

fn params_from(c: &Common) -> Result<EvalParams, String> {
    let p = build_params(c.eps, c.use_asymptotic, c.use_maclaurin).map_err(|e| e.to_string())?;
    match c.h_override {
        Some(h) => p.with_step_override(h).map_err(|e| e.to_string()),
        None => Ok(p),
    }
}

fn grid_from(g: &GridArgs) -> Result<GridSpec, String> {
    GridSpec::new((g.re_min, g.re_max), (g.im_min, g.im_max), g.nre, g.nim).map_err(|e| e.to_string())
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        // a closed downstream pipe (`| head`) is not an error
        Err(Failure::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

enum Failure {
    Usage(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<String> for Failure {
    fn from(s: String) -> Self {
        Failure::Usage(s)
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::Eval { common, re, im } => {
            let p = params_from(&common)?;
            // Real-valued results on the real axis print a bare zero imaginary part.
            let line = if im == 0.0 && common.function != FunctionKind::W {
                let x = evaluate_real(common.function, re, &p).map_err(|e| e.to_string())?;
                warn_overflow(x.is_finite(), re, err)?;
                format!("{x:.16e} 0")
            } else {
                let v = evaluate(common.function, Complex64::new(re, im), &p);
                warn_overflow(v.is_finite(), re + im, err)?;
                format!("{:.16e} {:.16e}", v.re, v.im)
            };
            writeln!(out, "{line}")?;
            Ok(EXIT_OK)
        }
        Command::Params { common } => {
            let p = params_from(&common)?;
            write_params(&p, out)?;
            Ok(EXIT_OK)
        }
        Command::AccuracyMap { common, grid, reference, out: out_path } => {
            let p = params_from(&common)?;
            let spec = grid_from(&grid)?;
            let set = match reference::ReferenceSet::from_path(&reference) {
                Ok(s) => s,
                Err(msg) => {
                    writeln!(err, "error: reference: {msg}")?;
                    return Ok(EXIT_DATA_MISMATCH);
                }
            };
            let rows = match accuracy::accuracy_rows(common.function, &spec.points(), &set, &p) {
                Ok(r) => r,
                Err(z) => {
                    writeln!(err, "error: no reference value for z = ({}, {})", z.re, z.im)?;
                    return Ok(EXIT_DATA_MISMATCH);
                }
            };
            match out_path {
                Some(path) => {
                    let f = std::fs::File::create(&path)?;
                    accuracy::write_csv(&rows, std::io::BufWriter::new(f))?;
                }
                None => accuracy::write_csv(&rows, &mut *out)?,
            }
            writeln!(out, "{}", accuracy::summarize(&rows))?;
            Ok(EXIT_OK)
        }
        Command::Bench { common, grid, repetitions } => {
            if repetitions == 0 {
                return Err(Failure::Usage("--repetitions must be at least 1".into()));
            }
            let p = params_from(&common)?;
            let spec = grid_from(&grid)?;
            let report = bench::bench(common.function, &spec.points(), &p, repetitions);
            writeln!(
                out,
                "total_seconds={:.6} ns_per_call={:.2} n={}",
                report.total.as_secs_f64(),
                report.ns_per_call(),
                spec.len()
            )?;
            for b in &report.buckets {
                writeln!(out, "region={} ns_per_call={:.2} n={}", b.region, b.ns_per_call, b.n)?;
            }
            writeln!(out, "checksum={:.17e}", report.checksum)?;
            Ok(EXIT_OK)
        }
        Command::Selftest { common } => {
            let p = params_from(&common)?;
            let results = selftest::run_all(&p);
            for r in &results {
                writeln!(out, "{r}")?;
            }
            Ok(if results.iter().all(|r| r.passed) { EXIT_OK } else { EXIT_SELFTEST_FAILED })
        }
    }
}

fn warn_overflow(finite: bool, arg: f64, err: &mut dyn Write) -> std::io::Result<()> {
    if !finite && arg.is_finite() {
        writeln!(err, "warning: result exceeds the binary64 range")?;
    }
    Ok(())
}

/// `name=value` lines for every derived constant.
pub fn write_params(p: &EvalParams, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "eps={:e}", p.eps())?;
    writeln!(out, "h={}", p.h())?;
    writeln!(out, "N={}", p.n_terms())?;
    writeln!(out, "strip_height={}", p.strip_height())?;
    writeln!(out, "re_cut={}", p.re_cut())?;
    writeln!(out, "g={}", p.g_cut())?;
    writeln!(out, "asym_radius={}", p.asym_radius())?;
    writeln!(out, "asym_terms={}", p.asym_terms())?;
    writeln!(out, "use_asymptotic={}", p.use_asymptotic())?;
    writeln!(out, "use_maclaurin={}", p.use_maclaurin())?;
    writeln!(out, "maclaurin_radius={}", p.maclaurin_radius())?;
    writeln!(out, "maclaurin_terms={}", p.maclaurin_terms())?;
    writeln!(out, "discretization_bound={:e}", p.discretization_bound())
}
