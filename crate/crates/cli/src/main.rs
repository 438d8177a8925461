//! `gsetf`: Fourier analysis on G-sets from the command line.
//!
//! Exit codes: 0 computed, 1 input error, 2 budget exceeded, 3 internal
//! consistency failure.

mod commands;
mod problem;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gset_fourier::DEFAULT_TOLERANCE;

use commands::{CriterionArg, Failure, ModeArg};
use problem::Problem;
use report::{Format, Status};

#[derive(Parser)]
#[command(name = "gsetf", version, about = "Fourier analysis on finite G-sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Problem file (JSON).
    file: PathBuf,
    /// Comparison tolerance; overrides the file's "tolerance".
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Orbits, kernel, component dimensions and the bent-existence precondition.
    Info(Common),
    /// The G-dual basis.
    Dual(Common),
    /// Fourier transform of the function and its energy per character.
    Fourier(Common),
    /// Decomposition of the function into character components.
    Decompose(Common),
    /// Whether the function is G-linear.
    CheckLinear(Common),
    /// Bentness of a unitary function.
    CheckBent {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "all")]
        criterion: CriterionArg,
    },
    /// G-perfect nonlinearity of a group-valued function.
    CheckPnl {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "both")]
        mode: ModeArg,
    },
    /// All bent functions with values in the q-th roots of unity.
    SearchBent {
        #[command(flatten)]
        common: Common,
        /// Root order; defaults to the file's roots_of_unity order.
        #[arg(long)]
        q: Option<usize>,
        #[arg(long, value_enum, default_value = "all")]
        criterion: CriterionArg,
    },
    /// All G-perfect nonlinear functions into a codomain group.
    SearchPnl {
        #[command(flatten)]
        common: Common,
        /// Codomain invariant factors, e.g. `3` or `2,2`.
        #[arg(long, value_delimiter = ',')]
        codomain: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value = "both")]
        mode: ModeArg,
    },
    /// Checks the orthogonality, linearity and conjugation relations of the G-dual.
    Verify(Common),
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Info(c)
            | Command::Dual(c)
            | Command::Fourier(c)
            | Command::Decompose(c)
            | Command::CheckLinear(c)
            | Command::Verify(c) => c,
            Command::CheckBent { common, .. }
            | Command::CheckPnl { common, .. }
            | Command::SearchBent { common, .. }
            | Command::SearchPnl { common, .. } => common,
        }
    }
}

fn run(command: &Command) -> Result<(report::Report, Format), Failure> {
    let common = command.common();
    let source = std::fs::read_to_string(&common.file)
        .map_err(|e| Failure::Input(format!("{}: {e}", common.file.display())))?;
    let problem =
        Problem::parse(&source).map_err(|e| Failure::Input(format!("{}: {e}", common.file.display())))?;
    let tol = common.tol.or(problem.tolerance).unwrap_or(DEFAULT_TOLERANCE);
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Failure::Input(format!("tolerance {tol} must be positive")));
    }
    let report = match command {
        Command::Info(_) => commands::info(&problem, tol),
        Command::Dual(_) => commands::dual(&problem, tol),
        Command::Fourier(_) => commands::fourier(&problem, tol),
        Command::Decompose(_) => commands::decompose(&problem, tol),
        Command::CheckLinear(_) => commands::check_linear(&problem, tol),
        Command::CheckBent { criterion, .. } => commands::check_bent(&problem, tol, *criterion),
        Command::CheckPnl { mode, .. } => commands::check_pnl(&problem, tol, *mode),
        Command::SearchBent { q, criterion, .. } => commands::search_bent(&problem, tol, *q, *criterion),
        Command::SearchPnl { codomain, mode, .. } => {
            commands::search_pnl(&problem, tol, codomain.clone(), *mode)
        }
        Command::Verify(_) => commands::verify(&problem, tol),
    }?;
    Ok((report, common.format))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli.command) {
        Ok((report, format)) => {
            print!("{}", report.render(format));
            match report.status {
                Status::Computed => ExitCode::SUCCESS,
                Status::Inconsistent => {
                    eprintln!("error: criteria disagree");
                    ExitCode::from(3)
                }
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
