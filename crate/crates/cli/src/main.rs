//! `fi-calc`: exact FI-module calculus from the command line.

mod commands;
mod document;
mod error;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fi_calc_core::fimod::{DEFAULT_SAMPLES, DEFAULT_SEED};
use fi_calc_core::symrep::Partition;

use crate::document::{Document, Format};
use crate::error::{CliError, CliResult};

#[derive(Parser)]
#[command(name = "fi-calc", version, about = "Exact calculus of FI-modules over the rationals")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format for reports (generated modules are always JSON).
    #[arg(long, value_enum, default_value = "markdown", global = true)]
    format: Format,

    /// Write output here instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    /// Lift the default size limits (n ≤ 5, K ≤ 10).
    #[arg(long, global = true)]
    allow_large: bool,
}

fn partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: fi_calc_core::Error| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Check the relations of an FI-module JSON file.
    Validate {
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
    },
    /// Emit the free module M(V(λ)) as JSON.
    Free {
        #[arg(long, value_parser = partition, allow_hyphen_values = true)]
        lambda: Partition,
        #[arg(long = "max-degree")]
        max_degree: usize,
    },
    /// Emit the representable module ℚF_n as JSON.
    Representable {
        #[arg(long)]
        n: usize,
        #[arg(long = "max-degree")]
        max_degree: usize,
    },
    /// Taylor coefficients C_0E, …, C_NE of a module.
    Coefficients {
        input: PathBuf,
        #[arg(long = "max-n")]
        max_n: Option<usize>,
    },
    /// Specht decomposition of E(k), for one k or every degree in the window.
    Decompose {
        input: PathBuf,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Predict E(k) from the coefficients and compare with the direct decomposition.
    Predict {
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long = "max-n")]
        max_n: Option<usize>,
    },
    /// Reduced integral homology of the nerve of P(n,k).
    Homology {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// The Kostka number K_{λ,μ}.
    Kostka {
        #[arg(long, value_parser = partition)]
        lambda: Partition,
        #[arg(long, value_parser = partition)]
        mu: Partition,
    },
    /// Dimension and character of ℚG_n(k).
    Gn {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Run every check up to the given sizes and print a PASS/FAIL report.
    Report {
        #[arg(long = "n-max")]
        n_max: usize,
        #[arg(long = "k-max")]
        k_max: usize,
    },
}

enum Output {
    Doc(Document),
    Raw(String),
}

fn configure_threads() -> CliResult<()> {
    let Ok(value) = std::env::var("FI_CALC_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| CliError::Usage(format!("FI_CALC_THREADS: '{value}' is not a positive integer")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Usage(format!("FI_CALC_THREADS: {e}")))
}

fn run(cli: &Cli) -> CliResult<Output> {
    use commands::*;
    let large = cli.allow_large;
    Ok(match &cli.command {
        Command::Validate { input, seed, samples } => {
            Output::Doc(validate_cmd(&load_module("validate", input, large)?, *seed, *samples))
        }
        Command::Free { lambda, max_degree } => Output::Raw(generate_free(lambda, *max_degree, large)?),
        Command::Representable { n, max_degree } => Output::Raw(generate_representable(*n, *max_degree, large)?),
        Command::Coefficients { input, max_n } => {
            Output::Doc(coefficients_cmd(&load_module("coefficients", input, large)?, *max_n)?)
        }
        Command::Decompose { input, k } => Output::Doc(decompose_cmd(&load_module("decompose", input, large)?, *k)?),
        Command::Predict { input, k, max_n } => {
            Output::Doc(predict_cmd(&load_module("predict", input, large)?, *k, *max_n)?)
        }
        Command::Homology { n, k } => Output::Doc(homology_cmd(*n, *k, large)?),
        Command::Kostka { lambda, mu } => Output::Doc(kostka_cmd(lambda, mu)?),
        Command::Gn { n, k } => Output::Doc(gn_cmd(*n, *k, large)?),
        Command::Report { n_max, k_max } => Output::Doc(report::full_report(*n_max, *k_max, large)?),
    })
}

fn emit(cli: &Cli, text: &str) -> CliResult<()> {
    match &cli.output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Usage(format!("cannot write '{}': {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).and_then(|_| out.flush()).map_err(|e| CliError::Usage(format!("stdout: {e}")))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|_| run(&cli)).and_then(|out| {
        let (text, failed) = match out {
            Output::Doc(d) => (d.render(cli.format), d.failed()),
            Output::Raw(s) => (s, false),
        };
        emit(&cli, &text)?;
        Ok(failed)
    });
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("fi-calc: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
