//! `abs-extremal`: compute ABS values, build extremal families, enumerate
//! classes and run verification sweeps.
//!
//! Exit codes: 0 success, 1 refuted claim or lemma failure/finding, 2 usage,
//! parse or parameter error.

mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::{CliError, Status};

fn run(cli: Cli) -> Result<Status, CliError> {
    if let Some(workers) = cli.workers {
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers as usize)
            .build_global()
            .map_err(|e| CliError::Usage(format!("cannot start {workers} workers: {e}")))?;
    }
    match cli.command {
        Command::Compute(a) => commands::compute(&a),
        Command::Build(a) => commands::build(&a),
        Command::Enumerate(a) => commands::enumerate(&a),
        Command::Verify(a) => commands::verify(&a),
        Command::LemmaCheck(a) => commands::lemma_check(&a),
        Command::Table(a) => commands::table(&a),
    }
}

fn main() -> ExitCode {
    // clap prints its own diagnostics and exits with 2 on usage errors
    let cli = Cli::parse();
    match run(cli) {
        Ok(Status::Success) => ExitCode::SUCCESS,
        Ok(Status::Refuted) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
