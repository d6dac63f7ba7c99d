use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qcorona::arith::parse_rat;
use qcorona::Quat;
use qcorona_cli::commands::{self, Options, Report, Status, DEFAULT_SAMPLE_POINTS};
use qcorona_cli::files::{read_instance, read_solution, to_canonical};

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Exact algebra of quaternionic polynomials and a solver for f1*h1 + ... + fn*hn = 1.
#[derive(Parser)]
#[command(name = "qcorona", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Number of rational slice points sampled by `rank`.
    #[arg(long, global = true, default_value_t = DEFAULT_SAMPLE_POINTS)]
    sample_points: usize,

    /// Maximum number of maximal minors evaluated when certifying full rank.
    #[arg(long, global = true, default_value_t = qcorona::polysolve::DEFAULT_MINOR_BUDGET)]
    minor_budget: usize,

    /// Print intermediate data (splits, particular solution, correction, minors).
    #[arg(long, global = true)]
    trace: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Regular product f1*f2*...*fn of the polynomials in the file.
    Star { instance: PathBuf },
    /// Regular conjugate of each polynomial.
    Conj { instance: PathBuf },
    /// Symmetrization f*f^c of each polynomial.
    Sym { instance: PathBuf },
    /// Evaluate each polynomial at a quaternion.
    Eval {
        instance: PathBuf,
        /// Point as four comma-separated rationals, e.g. "0,1/2,0,-1".
        #[arg(long, value_parser = parse_quat, allow_hyphen_values = true)]
        at: Quat,
    },
    /// Slice components F, G with f = F + G j on the slice through i.
    Split { instance: PathBuf },
    /// Spherical and isolated zeros of each polynomial.
    Zeros { instance: PathBuf },
    /// The syzygy matrices A and B of the split system.
    Syzygy { instance: PathBuf },
    /// Ranks and nullities of A, B and (A,-B) at sample points.
    Rank { instance: PathBuf },
    /// Solve f1*h1 + ... + fn*hn = 1 and write a solution file.
    Solve {
        instance: PathBuf,
        /// Output path; defaults to the instance path with extension `sol`.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Re-check a solution file against an instance.
    Verify { instance: PathBuf, solution: PathBuf },
    /// Decide solvability and locate common zeros.
    Diagnose { instance: PathBuf },
}

fn parse_quat(s: &str) -> Result<Quat, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [a, b, c, d] = parts.as_slice() else {
        return Err(format!("expected four comma-separated rationals, got {}", parts.len()));
    };
    let r = |t: &str| parse_rat(t).ok_or_else(|| format!("malformed rational {t:?}"));
    Ok(Quat::new(r(a)?, r(b)?, r(c)?, r(d)?))
}

fn run(cli: Cli) -> Result<Report, String> {
    let opts = Options {
        sample_points: cli.sample_points,
        minor_budget: cli.minor_budget,
        trace: cli.trace,
    };
    let load = |p: &Path| read_instance(p).map_err(|e| e.to_string());
    let core = |e: qcorona::Error| e.to_string();
    match cli.command {
        Command::Star { instance } => Ok(commands::star(&load(&instance)?)),
        Command::Conj { instance } => Ok(commands::conj(&load(&instance)?)),
        Command::Sym { instance } => Ok(commands::sym(&load(&instance)?)),
        Command::Eval { instance, at } => Ok(commands::eval(&load(&instance)?, &at)),
        Command::Split { instance } => Ok(commands::split(&load(&instance)?)),
        Command::Zeros { instance } => commands::zeros(&load(&instance)?).map_err(core),
        Command::Syzygy { instance } => commands::syzygy(&load(&instance)?).map_err(core),
        Command::Rank { instance } => commands::rank(&load(&instance)?, &opts).map_err(core),
        Command::Solve { instance, output } => {
            let solved = commands::solve(&load(&instance)?, &opts).map_err(core)?;
            let mut report = solved.report;
            if let Some(sol) = solved.solution {
                let path = output.unwrap_or_else(|| instance.with_extension("sol"));
                std::fs::write(&path, to_canonical(&sol))
                    .map_err(|e| format!("{}: {e}", path.display()))?;
                report.text.push_str(&format!("solution written to {}\n", path.display()));
            }
            Ok(report)
        }
        Command::Verify { instance, solution } => {
            let sol = read_solution(&solution).map_err(|e| e.to_string())?;
            commands::verify(&load(&instance)?, &sol).map_err(core)
        }
        Command::Diagnose { instance } => commands::diagnose(&load(&instance)?, &opts).map_err(core),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(report) => {
            print!("{}", report.text);
            match report.status {
                Status::Success => ExitCode::SUCCESS,
                Status::Failure => ExitCode::from(EXIT_FAILURE),
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
