use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use hstar_cli::commands::{self, Options};
use hstar_cli::document::QuadrupleDocument;
use hstar_cli::report::{to_json, to_toml};
use hstar_cli::CliError;

#[derive(Parser)]
#[command(name = "hstar", version, about = "Boundary invariants and frame geometry checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Tolerance for residual flags
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol: f64,
    /// Seed for sampled inputs
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Number of random samples per check
    #[arg(long, global = true, default_value_t = 100)]
    samples: usize,
    /// Relative finite-difference step
    #[arg(long = "fd-step", global = true, default_value_t = 1e-5)]
    fd_step: f64,
    /// Emit JSON instead of TOML
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants, normal form and configuration coordinates of a quadruple document
    Invariants { file: PathBuf },
    /// Curvature tables and geometric identities against their printed values
    VerifyGeometry,
    /// Round trips of the configuration maps and group isomorphisms
    Roundtrips,
}

fn emit<T: Serialize>(report: &T, json: bool) {
    if json {
        println!("{}", to_json(report));
    } else {
        print!("{}", to_toml(report));
    }
}

fn run(cli: &Cli) -> Result<bool, CliError> {
    let opts = Options {
        tol: cli.common.tol,
        seed: cli.common.seed,
        samples: cli.common.samples,
        fd_step: cli.common.fd_step,
    };
    match &cli.command {
        Command::Invariants { file } => {
            opts.validate()?;
            let doc = QuadrupleDocument::parse(&std::fs::read_to_string(file)?)?;
            let report = commands::invariants(&doc, opts.tol)?;
            emit(&report, cli.common.json);
            Ok(report.pass)
        }
        Command::VerifyGeometry | Command::Roundtrips => {
            let report = match cli.command {
                Command::VerifyGeometry => commands::verify_geometry(&opts)?,
                _ => commands::roundtrips(&opts)?,
            };
            for w in &report.warnings {
                eprintln!("warning: {w}");
            }
            emit(&report, cli.common.json);
            Ok(report.pass)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
