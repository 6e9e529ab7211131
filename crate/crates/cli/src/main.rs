//! `ptqm`: command-line front end for the two-level PT toolkit.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod commands;
mod output;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ptqm::{EvolutionConfig, PtError};

use crate::output::OutputFormat;

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_DOMAIN: u8 = 2;
pub const EXIT_CHECK: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "ptqm", version, about = "PT-symmetric two-level systems and the quantum brachistochrone")]
#[command(args_conflicts_with_subcommands = true)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalArgs {
    /// Reduced Planck constant.
    #[arg(long, allow_negative_numbers = true, global = true, default_value_t = 1.0)]
    hbar: f64,
    /// Numerical tolerance for invariant checks.
    #[arg(long, allow_negative_numbers = true, global = true, default_value_t = 1e-12)]
    tol: f64,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Read angle flags (--psi, --alpha-min, --alpha-max) in degrees.
    #[arg(long, global = true)]
    degrees: bool,
}

#[derive(Debug, Args, Clone, Copy)]
#[command(next_help_heading = "Hamiltonian")]
struct HamiltonianArgs {
    #[arg(long, allow_negative_numbers = true)]
    r: f64,
    #[arg(long, allow_negative_numbers = true)]
    s: f64,
    #[arg(long, allow_negative_numbers = true)]
    psi: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StateChoice {
    Nu1,
    Nu2,
    #[value(name = "eps+")]
    EpsPlus,
    #[value(name = "eps-")]
    EpsMinus,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Eigenvalues, gap, α and phase classification.
    Spectrum(HamiltonianArgs),
    /// Parity and C matrices with their consistency residuals.
    Operators(HamiltonianArgs),
    /// Sampled time evolution of a basis state or eigenvector.
    Evolve {
        #[command(flatten)]
        h: HamiltonianArgs,
        #[arg(long, allow_negative_numbers = true)]
        t_max: f64,
        #[arg(long, default_value_t = 101)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = StateChoice::Nu1)]
        state: StateChoice,
    },
    /// Optimal PT transition time against the matched Hermitian one.
    Brachistochrone(HamiltonianArgs),
    /// Equivalence sweep over α.
    Sweep {
        #[arg(long, allow_negative_numbers = true)]
        alpha_min: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        alpha_max: Option<f64>,
        #[arg(long, default_value_t = ptqm::brachistochrone::DEFAULT_SWEEP_STEPS)]
        steps: usize,
        #[arg(long, allow_negative_numbers = true, default_value_t = 1.0)]
        s: f64,
    },
    /// Run every invariant suite over the reference grid.
    Selftest,
}

pub struct Ctx {
    pub cfg: EvolutionConfig,
    pub format: OutputFormat,
    pub degrees: bool,
}

impl Ctx {
    pub fn angle(&self, x: f64) -> f64 {
        if self.degrees {
            x.to_radians()
        } else {
            x
        }
    }
}

/// Failure of a command, mapped onto an exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Domain(PtError),
    Check(String),
    Io(anyhow::Error),
}

impl From<PtError> for Failure {
    fn from(e: PtError) -> Self {
        Failure::Domain(e)
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.into())
    }
}

fn open_output(path: Option<&PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run(cli: Cli) -> Result<(), Failure> {
    let g = cli.global;
    let cfg = EvolutionConfig::new(g.hbar, g.tol).map_err(|e| Failure::Usage(e.to_string()))?;
    let ctx = Ctx { cfg, format: g.format, degrees: g.degrees };

    // Compute first so that a failing command leaves no partial output file.
    let report = match cli.command {
        Command::Spectrum(h) => commands::spectrum(&ctx, h.r, h.s, h.psi),
        Command::Operators(h) => commands::operators(&ctx, h.r, h.s, h.psi),
        Command::Evolve { h, t_max, steps, state } => {
            commands::evolve(&ctx, h.r, h.s, h.psi, t_max, steps, state)
        }
        Command::Brachistochrone(h) => commands::brachistochrone(&ctx, h.r, h.s, h.psi),
        Command::Sweep { alpha_min, alpha_max, steps, s } => {
            commands::sweep(&ctx, alpha_min, alpha_max, steps, s)
        }
        Command::Selftest => commands::selftest(&ctx),
    }?;

    let mut out = open_output(g.output.as_ref())?;
    report.emit(ctx.format, &mut out)?;
    out.flush()?;
    match report.failure {
        Some(msg) => Err(Failure::Check(msg)),
        None => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::from(EXIT_OK),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_DOMAIN)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(EXIT_CHECK)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
