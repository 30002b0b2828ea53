use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use pairswap_scan::{render, Engine, Mode, Result, SpecOverrides};

/// Entanglement transfer between exchange-coupled qubit pairs: sweeps as CSV.
#[derive(Parser)]
#[command(name = "pairswap", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Negativity, energy and receiver-state elements over time.
    Timeseries(Shared),
    /// Time series followed by frontier-curve rows for (U, N) plots.
    Phasediagram(Shared),
    /// Randomized check of the negativity/energy bound.
    Boundcheck(Shared),
    /// Compare analytic solutions with numerical propagation.
    Verify(Shared),
}

#[derive(Args)]
struct Shared {
    /// key = value file; flags given here override it
    #[arg(long)]
    config: Option<PathBuf>,
    /// Initial-state angle in radians
    #[arg(long, allow_negative_numbers = true)]
    theta: Option<f64>,
    #[arg(long)]
    g_aa: Option<f64>,
    #[arg(long)]
    g_bb: Option<f64>,
    #[arg(long)]
    kappa_a: Option<f64>,
    #[arg(long)]
    kappa_b: Option<f64>,
    #[arg(long)]
    omega: Option<f64>,
    #[arg(long)]
    t_final: Option<f64>,
    #[arg(long)]
    samples: Option<usize>,
    /// closed, exact or rk4
    #[arg(long)]
    engine: Option<Engine>,
    #[arg(long)]
    seed: Option<u64>,
    /// Output file (default: standard output)
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Shared {
    fn overrides(&self) -> SpecOverrides {
        SpecOverrides {
            theta: self.theta,
            g_aa: self.g_aa,
            g_bb: self.g_bb,
            kappa_a: self.kappa_a,
            kappa_b: self.kappa_b,
            omega: self.omega,
            t_final: self.t_final,
            samples: self.samples,
            engine: self.engine,
            seed: self.seed,
        }
    }
}

fn run(mode: Mode, args: &Shared) -> Result<bool> {
    let file = match &args.config {
        Some(path) => SpecOverrides::parse_config(&fs::read_to_string(path)?)?,
        None => SpecOverrides::default(),
    };
    let spec = file.merged_with(args.overrides()).build(mode)?;
    let (bytes, passed) = render(&spec)?;
    match &args.out {
        Some(path) => fs::write(path, &bytes)?,
        None => std::io::stdout().lock().write_all(&bytes)?,
    }
    Ok(passed)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let (mode, args) = match &cli.command {
        Command::Timeseries(a) => (Mode::TimeSeries, a),
        Command::Phasediagram(a) => (Mode::PhaseDiagram, a),
        Command::Boundcheck(a) => (Mode::BoundCheck, a),
        Command::Verify(a) => (Mode::Verify, a),
    };
    match run(mode, args) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("pairswap: {mode} failed its checks");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("pairswap: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
