use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use mrs_cli::commands::{self, ExportFormat};
use mrs_cli::spec::GridConfig;
use mrs_cli::CliError;

#[derive(Parser)]
#[command(name = "mrs", version, about = "Ruled surfaces in Minkowski 3-space")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Tolerances {
    /// Step for numerical derivatives of the structure functions.
    #[arg(long, default_value_t = 1e-4)]
    step: f64,
    /// Null-vector tolerance.
    #[arg(long = "tol-null", default_value_t = 1e-9)]
    tol_null: f64,
    /// Threshold on |EG - F^2| below which a point is degenerate.
    #[arg(long = "tol-degenerate", default_value_t = 1e-10)]
    tol_degenerate: f64,
}

impl Tolerances {
    fn grid(self, nu: usize, nv: usize) -> GridConfig {
        GridConfig {
            nu,
            nv,
            derivative_step: self.step,
            tol_null: self.tol_null,
            tol_degenerate: self.tol_degenerate,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate frame, structure functions and curvature at one point.
    Eval {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        u: f64,
        #[arg(long, allow_hyphen_values = true)]
        v: f64,
        /// Include the loaded spec in the output.
        #[arg(long)]
        echo_spec: bool,
        #[command(flatten)]
        tol: Tolerances,
    },
    /// Compare closed-form curvature expressions against the oracle on a grid.
    Audit {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, default_value_t = 32)]
        nu: usize,
        #[arg(long, default_value_t = 32)]
        nv: usize,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        tol: Tolerances,
    },
    /// Write a mesh (obj) or curvature field (csv).
    Export {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        format: String,
        #[arg(long, default_value_t = 32)]
        nu: usize,
        #[arg(long, default_value_t = 32)]
        nv: usize,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        tol: Tolerances,
    },
    /// Print the director frame at evenly spaced parameters as CSV.
    Frames {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        tol: Tolerances,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Eval {
            spec,
            u,
            v,
            echo_spec,
            tol,
        } => {
            print!("{}", commands::eval(&spec, u, v, echo_spec, &tol.grid(2, 2))?);
        }
        Command::Audit {
            spec,
            nu,
            nv,
            out,
            tol,
        } => {
            let report = commands::audit_to_file(&spec, &tol.grid(nu, nv), &out)?;
            eprintln!(
                "wrote {} ({} formulas, {} skipped points)",
                out.display(),
                report.formulas.len(),
                report.skipped
            );
        }
        Command::Export {
            spec,
            format,
            nu,
            nv,
            out,
            tol,
        } => {
            let format: ExportFormat = format.parse()?;
            commands::export(&spec, format, &tol.grid(nu, nv), &out)?;
        }
        Command::Frames { spec, n, tol } => {
            print!("{}", commands::frames(&spec, n, &tol.grid(2, 2))?);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
