//! `relce` command-line entry point.
//!
//! Every run prints one JSON object. Exit status 0 means the result holds,
//! 1 means the computation answered no (witness fails, counterexample found,
//! no candidate), and 2 means the input or invocation was unusable.

mod cli;
mod commands;
mod error;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use serde::Serialize;

use crate::cli::Cli;
use crate::commands::Verdict;
use crate::error::CliError;

#[derive(Serialize)]
struct ErrorBody {
    error: CliError,
}

fn fail(err: CliError) -> ExitCode {
    let body = serde_json::to_string_pretty(&ErrorBody { error: err }).expect("errors serialize");
    println!("{body}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{}", e.render());
            return fail(CliError::usage(e.kind().to_string()).with_details(e.to_string()));
        }
    };

    let outcome = match commands::run(&cli.command) {
        Ok(outcome) => outcome,
        Err(err) => return fail(err),
    };

    match &cli.command.output().out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &outcome.json) {
                return fail(CliError::io(path, e));
            }
        }
        None => print!("{}", outcome.json),
    }

    match outcome.verdict {
        Verdict::Yes => ExitCode::SUCCESS,
        Verdict::No => ExitCode::from(1),
    }
}
