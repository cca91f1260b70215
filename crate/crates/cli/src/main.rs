mod args;
mod commands;
mod output;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};

/// Why a run did not pass.
#[derive(Debug)]
pub enum Failure {
    /// Bad arguments: exit 1.
    Usage(String),
    /// Output could not be written: exit 1.
    Io(String),
    /// Something was certified false or left unresolved: exit 2.
    Certification(String),
}

impl From<harmonic_cert::Error> for Failure {
    fn from(e: harmonic_cert::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    let result = match &cli.command {
        Command::Certify(a) => commands::certify(a),
        Command::Table(a) => commands::table(a),
        Command::Identities(a) => commands::identities(a),
        Command::Limits(a) => commands::limits(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Certification(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
    }
}
