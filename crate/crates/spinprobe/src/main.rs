//! Command-line scenario runner.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use spinprobe::scenario::{
    emit_csv, fit_qwp_sweep, load_scenario, run_power_sweep, run_qwp_sweep, run_spatial_map,
    Scenario, Table,
};
use spinprobe::Error;

#[derive(Parser)]
#[command(
    name = "spinprobe",
    about = "Simulate photonic-spin-density sensing with an NV spin qubit",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep the quarter-wave-plate angle and emit the effective-field law
    QwpSweep(RunArgs),
    /// Sweep the beam power and emit the linearity table
    PowerSweep(RunArgs),
    /// Map the effective field on a spatial grid near a waveguide
    Map(RunArgs),
    /// Run the QWP sweep and fit B(theta) = A sin(2 theta + theta0) + B0
    Fit(RunArgs),
}

#[derive(clap::Args)]
struct RunArgs {
    /// Scenario JSON document
    #[arg(long)]
    config: PathBuf,
    /// Output CSV path
    #[arg(long)]
    out: PathBuf,
    /// Print the resolved parameter set (all defaults filled in)
    #[arg(long)]
    verbose: bool,
}

fn run(scenario: &Scenario, args: &RunArgs, build: impl FnOnce(&Scenario) -> spinprobe::Result<Table>) -> spinprobe::Result<()> {
    let table = build(scenario)?;
    emit_csv(&table, &args.out)?;
    eprintln!("wrote {} rows to {}", table.rows().len(), args.out.display());
    Ok(())
}

fn dispatch(cli: &Cli) -> spinprobe::Result<()> {
    let args = match &cli.command {
        Command::QwpSweep(a) | Command::PowerSweep(a) | Command::Map(a) | Command::Fit(a) => a,
    };
    let scenario = load_scenario(&args.config)?;
    if args.verbose {
        eprintln!("{}", scenario.to_json());
    }
    match &cli.command {
        Command::QwpSweep(a) => run(&scenario, a, run_qwp_sweep),
        Command::PowerSweep(a) => run(&scenario, a, run_power_sweep),
        Command::Map(a) => run(&scenario, a, run_spatial_map),
        Command::Fit(a) => run(&scenario, a, |s| {
            let sweep = run_qwp_sweep(s)?;
            let fit = fit_qwp_sweep(&sweep)?;
            let mut table = Table::new(&[
                "amplitude_nt",
                "offset_nt",
                "phase_deg",
                "rms_residual_nt",
            ]);
            table.push_row(vec![
                fit.amplitude,
                fit.offset,
                fit.phase.to_degrees(),
                fit.rms_residual,
            ]);
            Ok(table)
        }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if matches!(&e, Error::Validation { .. } | Error::Parse(_)) {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
