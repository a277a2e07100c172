//! Command-line interface: verify branch-curve counts on a surface, analyse
//! focal loci of a line family, evaluate invariant formulas, or profile a
//! single projection line.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

use branchcurve::pipeline::{run_foci, run_invariants, run_profile, run_verify, RunConfig};
use branchcurve::report::Report;

#[derive(Debug, Parser)]
#[command(name = "branchcurve")]
#[command(about = "branch curves of generic surface projections: exact verification toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct CommonOpts {
    /// Deterministic seed for primes, frames, and shears.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Write the JSON report here ('-' for stdout).
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Project a surface from seeded random centers and verify the branch
    /// curve: degree, node and cusp counts, per-point tangency checks,
    /// absolute irreducibility, across independent primes.
    Verify {
        /// Surface file: one homogeneous polynomial in x0..x3, optional
        /// `# g=`, `# ksq=`, `# chi=`, `# deg_gamma=` headers.
        #[arg(long)]
        surface: PathBuf,

        /// Number of independent primes.
        #[arg(long, default_value_t = 2)]
        primes: u32,

        /// Frame retry budget per prime.
        #[arg(long, default_value_t = 8)]
        retries: u32,

        /// Allow long runs (quintic scale).
        #[arg(long, default_value_t = false)]
        stretch: bool,

        /// Abort politely after this many seconds.
        #[arg(long)]
        time_budget_secs: Option<u64>,

        #[command(flatten)]
        common: CommonOpts,
    },
    /// Focal form and foci of a two-parameter line family at a parameter
    /// point.
    Foci {
        /// Family file: two comma-separated 4-vectors of polynomials in
        /// u, v; `parametric:` prefix for a spanning-point pair.
        #[arg(long)]
        family: PathBuf,

        /// Parameter point, e.g. --at 1,1
        #[arg(long, value_parser = parse_pair)]
        at: (i64, i64),

        #[command(flatten)]
        common: CommonOpts,
    },
    /// Closed-form invariants for given surface data.
    Invariants {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        g: Option<i64>,
        #[arg(long)]
        ksq: Option<i64>,
        #[arg(long)]
        chi: Option<i64>,
        #[arg(long)]
        r: Option<i64>,
        #[arg(long)]
        h: Option<i64>,
        #[arg(long)]
        hs: Option<i64>,

        #[command(flatten)]
        common: CommonOpts,
    },
    /// Intersection profile of the line through the projection center and a
    /// plane point (replays the seeded first prime and frame).
    Profile {
        #[arg(long)]
        surface: PathBuf,

        /// Plane point, e.g. --point 1,2,3
        #[arg(long, value_parser = parse_triple)]
        point: (i64, i64, i64),

        /// Frame retry budget.
        #[arg(long, default_value_t = 8)]
        retries: u32,

        #[command(flatten)]
        common: CommonOpts,
    },
}

fn parse_pair(s: &str) -> Result<(i64, i64), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err("expected two comma-separated integers".into());
    }
    let a = parts[0].trim().parse().map_err(|e| format!("{e}"))?;
    let b = parts[1].trim().parse().map_err(|e| format!("{e}"))?;
    Ok((a, b))
}

fn parse_triple(s: &str) -> Result<(i64, i64, i64), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err("expected three comma-separated integers".into());
    }
    let a = parts[0].trim().parse().map_err(|e| format!("{e}"))?;
    let b = parts[1].trim().parse().map_err(|e| format!("{e}"))?;
    let c = parts[2].trim().parse().map_err(|e| format!("{e}"))?;
    Ok((a, b, c))
}

fn emit(report: &Report, json: &Option<PathBuf>) -> ExitCode {
    let text = report.to_json();
    match json {
        Some(path) if path.as_os_str() == "-" => println!("{text}"),
        Some(path) => {
            if let Err(e) = fs::write(path, &text) {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(4);
            }
            eprintln!("verdict: {:?}", report.verdict);
        }
        None => println!("{text}"),
    }
    ExitCode::from(report.verdict.exit_code() as u8)
}

fn read(path: &PathBuf) -> Result<String, ExitCode> {
    fs::read_to_string(path).map_err(|e| {
        eprintln!("cannot read {}: {e}", path.display());
        ExitCode::from(4)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify {
            surface,
            primes,
            retries,
            stretch,
            time_budget_secs,
            common,
        } => {
            let text = match read(&surface) {
                Ok(t) => t,
                Err(code) => return code,
            };
            let cfg = RunConfig {
                primes,
                seed: common.seed,
                retry_budget: retries,
                stretch,
                time_budget: time_budget_secs.map(Duration::from_secs),
            };
            let report = run_verify(&text, &surface.display().to_string(), &cfg);
            emit(&report, &common.json)
        }
        Command::Foci { family, at, common } => {
            let text = match read(&family) {
                Ok(t) => t,
                Err(code) => return code,
            };
            let cfg = RunConfig {
                primes: 0,
                seed: common.seed,
                ..RunConfig::default()
            };
            let report = run_foci(&text, &family.display().to_string(), at, &cfg);
            emit(&report, &common.json)
        }
        Command::Invariants {
            d,
            g,
            ksq,
            chi,
            r,
            h,
            hs,
            common,
        } => {
            let cfg = RunConfig {
                primes: 0,
                seed: common.seed,
                ..RunConfig::default()
            };
            let report = run_invariants(d, g, ksq, chi, r, h, hs, &cfg);
            emit(&report, &common.json)
        }
        Command::Profile {
            surface,
            point,
            retries,
            common,
        } => {
            let text = match read(&surface) {
                Ok(t) => t,
                Err(code) => return code,
            };
            let cfg = RunConfig {
                primes: 1,
                seed: common.seed,
                retry_budget: retries,
                ..RunConfig::default()
            };
            let report = run_profile(
                &text,
                &surface.display().to_string(),
                [point.0, point.1, point.2],
                &cfg,
            );
            emit(&report, &common.json)
        }
    }
}
