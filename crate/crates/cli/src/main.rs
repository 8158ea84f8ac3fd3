//! `so4prec`: build, evolve and image SO(4) coherent states of one
//! hydrogenic shell.

mod commands;
mod config;
mod error;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::error::CliResult;

#[derive(Parser, Debug)]
#[command(name = "so4prec", version, about = "Relativistic precession of hydrogenic SO(4) coherent states")]
struct Cli {
    /// Directory for outputs whose path is not given explicitly.
    #[arg(long, global = true, env = "SO4PREC_OUTDIR", default_value = ".")]
    outdir: PathBuf,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Observables, time scales and dephasing diagnostics of a state (JSON).
    State(commands::StateArgs),
    /// Precession angle and fidelity over time (CSV plus JSON summary).
    Evolve(commands::EvolveArgs),
    /// Equatorial density grid at one time, optionally with the classical orbit.
    Density(commands::DensityArgs),
    /// Data behind the eccentricity, dephasing and snapshot figures.
    Figures(commands::FiguresArgs),
    /// Run the built-in checks; exit status 3 on failure.
    Verify(verify::VerifyArgs),
}

fn run(cli: &Cli) -> CliResult<()> {
    match &cli.command {
        Command::State(a) => {
            let out = commands::state(a, &cli.outdir)?;
            println!("{}", out.display());
        }
        Command::Evolve(a) => {
            let (csv, json) = commands::evolve(a, &cli.outdir)?;
            println!("{}\n{}", csv.display(), json.display());
        }
        Command::Density(a) => {
            let out = commands::density(a, &cli.outdir)?;
            println!("{}", out.display());
        }
        Command::Figures(a) => {
            let out = commands::figures(a, &cli.outdir)?;
            println!("{}", out.display());
        }
        Command::Verify(a) => verify::run(a)?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("so4prec: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
