use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use poincare_harness::commands;
use poincare_harness::trace::{ChartPolicy, TraceOverrides};
use poincare_harness::verify::VerifyConfig;
use poincare_harness::{CliError, CliResult};

/// Poincaré-group kinematics over SL(2,C): JSON in, JSON out.
#[derive(Parser)]
#[command(name = "poincare", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ChartArg {
    Auto,
    #[value(name = "N")]
    N,
    #[value(name = "S")]
    S,
}

impl From<ChartArg> for ChartPolicy {
    fn from(c: ChartArg) -> Self {
        match c {
            ChartArg::Auto => ChartPolicy::Auto,
            ChartArg::N => ChartPolicy::N,
            ChartArg::S => ChartPolicy::S,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Lorentz matrix of an SL(2,C) element.
    Map {
        /// JSON file; stdin when absent or `-`.
        input: Option<PathBuf>,
    },
    /// E(2) factor and Wigner phases of a transformation at a lightlike momentum.
    LittleGroup {
        input: Option<PathBuf>,
        /// Chart for the image momentum.
        #[arg(long, value_enum, default_value = "auto")]
        chart: ChartArg,
        /// Helicities to report phases for.
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "1",
            allow_negative_numbers = true
        )]
        lambda: Vec<i32>,
        /// E(2) membership tolerance.
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Apply a scripted sequence of transformations to a state.
    Trace {
        input: Option<PathBuf>,
        /// Chart policy when the script does not set one.
        #[arg(long, value_enum)]
        chart: Option<ChartArg>,
        /// E(2) membership tolerance when the script does not set one.
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Run the randomized invariant battery.
    Verify {
        /// Optional JSON config `{"seed", "samples", "tol", "checks"}`.
        config: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        samples: Option<u64>,
        /// Threshold override, `NAME=VALUE`; repeatable.
        #[arg(long)]
        tol: Vec<String>,
        /// Run only this check; repeatable.
        #[arg(long)]
        check: Vec<String>,
    },
    /// Boost along an axis, or the standard boost to a massive momentum.
    Boost { input: Option<PathBuf> },
    /// Tangent field at a lightlike momentum.
    Tangent {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "auto")]
        chart: ChartArg,
    },
}

fn read_input(path: Option<&PathBuf>) -> CliResult<String> {
    let mut s = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => s = std::fs::read_to_string(p)?,
        _ => {
            std::io::stdin().read_to_string(&mut s)?;
        }
    }
    Ok(s)
}

fn print(v: &impl serde::Serialize) -> CliResult<()> {
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{}", serde_json::to_string_pretty(v)?) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        r => Ok(r?),
    }
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Map { input } => print(&commands::map(&read_input(input.as_ref())?)?),
        Command::LittleGroup {
            input,
            chart,
            lambda,
            tol,
        } => print(&commands::little_group(
            &read_input(input.as_ref())?,
            chart.into(),
            &lambda,
            tol,
        )?),
        Command::Trace { input, chart, tol } => print(&commands::trace(
            &read_input(input.as_ref())?,
            TraceOverrides {
                chart: chart.map(Into::into),
                e2_membership: tol,
            },
        )?),
        Command::Verify {
            config,
            seed,
            samples,
            tol,
            check,
        } => {
            let mut cfg = match config {
                Some(path) => commands::parse(&read_input(Some(&path))?)?,
                None => VerifyConfig::default(),
            };
            cfg.seed = seed.unwrap_or(cfg.seed);
            cfg.samples = samples.unwrap_or(cfg.samples);
            for t in &tol {
                let (name, value) = commands::parse_tol_override(t)?;
                cfg.tol.insert(name, value);
            }
            if !check.is_empty() {
                cfg.checks = Some(check);
            }
            let report = commands::verify(&cfg)?;
            print(&report)?;
            if report.pass {
                Ok(())
            } else {
                Err(CliError::VerifyFailed(report.failures().join(", ")))
            }
        }
        Command::Boost { input } => print(&commands::boost(&read_input(input.as_ref())?)?),
        Command::Tangent { input, chart } => print(&commands::tangent(
            &read_input(input.as_ref())?,
            chart.into(),
        )?),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
