//! `logdiv` — certificates and complexes for weighted-homogeneous free
//! divisors. Exit codes: 0 success, 1 mathematical inconsistency, 2 input
//! error.

use clap::{Parser, Subcommand};
use logdiv_cli::config::{self, ConfigFile, OutputFormat, Overrides};
use logdiv_cli::pipeline::{run, Command, RunError};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "logdiv",
    about = "Logarithmic derivations, Saito certificates, and twisted complexes \
             for weighted-homogeneous divisors",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: CommandArg,
    /// JSON configuration file; flags override its fields.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Comma-separated variable names, e.g. x,y,z.
    #[arg(long, global = true, value_delimiter = ',')]
    vars: Option<Vec<String>>,
    /// Divisor as an expression over the variables, e.g. "x^3 - y^2".
    #[arg(long, global = true)]
    f: Option<String>,
    /// Comma-separated weights as rationals, e.g. 1/3,1/2.
    #[arg(long, global = true, value_delimiter = ',')]
    weights: Option<Vec<String>>,
    /// Comma-separated twists, e.g. 0,1,2.
    #[arg(long, global = true, value_delimiter = ',')]
    k: Option<Vec<u32>>,
    /// Degree bound for randomized checks.
    #[arg(long, global = true)]
    degree_bound: Option<u32>,
    /// Seed for randomized checks; the report repeats byte for byte.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Output format: text or json.
    #[arg(long, global = true)]
    format: Option<String>,
}

#[derive(Clone, Copy, Subcommand)]
enum CommandArg {
    /// Check the weight grading of the divisor and normalize the weights.
    Wqh,
    /// Generators of the logarithmic derivations with their cofactors.
    Logder,
    /// Adapted basis, determinant certificate, and weight inequalities.
    Basis,
    /// Build the twisted complexes and check the complex property.
    Spencer,
    /// Randomized verification: d∘d = 0 and Euler-equation round trips.
    Verify,
    /// Constructive preimages for random coboundaries; graded slices.
    ExtWitness,
    /// Order-one annihilators of 1/f^k and the annihilation table.
    Annihilator,
    /// Every stage in order.
    All,
}

impl From<CommandArg> for Command {
    fn from(c: CommandArg) -> Command {
        match c {
            CommandArg::Wqh => Command::Wqh,
            CommandArg::Logder => Command::Logder,
            CommandArg::Basis => Command::Basis,
            CommandArg::Spencer => Command::Spencer,
            CommandArg::Verify => Command::Verify,
            CommandArg::ExtWitness => Command::ExtWitness,
            CommandArg::Annihilator => Command::Annihilator,
            CommandArg::All => Command::All,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let file = match cli.config.as_deref().map(ConfigFile::load) {
        Some(Ok(f)) => Some(f),
        Some(Err(e)) => {
            eprintln!("input error: {e}");
            return ExitCode::from(2);
        }
        None => None,
    };
    let flags = Overrides {
        vars: cli.vars,
        f: cli.f,
        weights: cli.weights,
        k: cli.k,
        degree_bound: cli.degree_bound,
        seed: cli.seed,
        format: cli.format,
    };
    let cfg = match config::resolve(file, flags) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("input error: {e}");
            return ExitCode::from(2);
        }
    };
    match run(cli.command.into(), &cfg) {
        Ok(report) => {
            match cfg.format {
                OutputFormat::Json => print!("{}", report.to_json()),
                OutputFormat::Text => print!("{}", report.to_text()),
            }
            ExitCode::SUCCESS
        }
        Err(err @ RunError::Input(_)) => {
            eprintln!("{err}");
            ExitCode::from(2)
        }
        Err(err @ RunError::Math(_)) => {
            eprintln!("{err}");
            ExitCode::from(1)
        }
    }
}
