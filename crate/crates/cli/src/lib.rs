//! Command-line front end for the k3fix engine.
//!
//! [`run`] takes an argument vector and returns the exit code together with
//! everything destined for stdout and stderr, so the binary is a thin shell
//! and tests can drive it in-process.
//!
//! Exit codes: [`EXIT_OK`] for success, FEASIBLE and PASS; [`EXIT_FINDING`]
//! when `analyze` finds no integer solution or `verify` fails; [`EXIT_USAGE`]
//! for malformed arguments or input; [`EXIT_INTERNAL`] when an internal
//! invariant check fails.

mod args;
mod commands;
pub mod report;

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::Parser;

pub use args::Format;
pub use report::{Outcome, Report, SystemDump};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INTERNAL: u8 = 3;
pub const EXIT_FINDING: u8 = 10;

/// Overrides the relation file read by `check-paper`.
pub const RELATIONS_ENV: &str = "K3FIX_RELATIONS";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Internal(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "error: {m}"),
            CliError::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<k3fix::Error> for CliError {
    fn from(e: k3fix::Error) -> Self {
        use k3fix::Error::*;
        match e {
            InvalidArgument(_)
            | InvalidRotation { .. }
            | InconsistentType(_)
            | DimensionMismatch { .. }
            | UnknownLabel(_)
            | Parse { .. } => CliError::Usage(e.to_string()),
            DivisionByZero | FieldMismatch { .. } | SymplecticCurveTerm | InexactDivision => {
                CliError::Internal(e.to_string())
            }
        }
    }
}

/// Parses `argv` (program name first) and executes the subcommand.
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match args::Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Output {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Output {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let echo = argv
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    match commands::execute(cli.command, echo) {
        Ok((code, text)) => Output {
            code,
            stdout: text,
            stderr: String::new(),
        },
        Err(e) => Output {
            code: match e {
                CliError::Usage(_) => EXIT_USAGE,
                CliError::Internal(_) => EXIT_INTERNAL,
            },
            stdout: String::new(),
            stderr: format!("{e}\n"),
        },
    }
}
