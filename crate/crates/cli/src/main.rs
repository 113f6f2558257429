//! `twinsort`: sort newline-delimited input with Twin Sort, print the
//! efficiency table, verify exhaustively, and benchmark against baselines.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 I/O or parse error.

mod bench;
mod input;
mod sort;
mod table;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "twinsort", version, about = "Instrumented Twin Sort toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sort newline-delimited values from a file or standard input.
    Sort(sort::SortArgs),
    /// Print the best/worst/average comparison model for a range of sizes.
    Table(table::TableArgs),
    /// Check every permutation of 1..=n against the reference sort.
    Verify(verify::VerifyArgs),
    /// Count comparisons (and optionally time) Twin Sort against baselines.
    Bench(bench::BenchArgs),
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug)]
pub enum CliError {
    VerificationFailed,
    Usage(String),
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::VerificationFailed => 1,
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
        }
    }

    pub fn io(path: Option<&PathBuf>, err: impl std::fmt::Display) -> Self {
        match path {
            Some(p) => CliError::Io(format!("{}: {err}", p.display())),
            None => CliError::Io(err.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Sort(args) => sort::run(args),
        Command::Table(args) => table::run(args),
        Command::Verify(args) => verify::run(args),
        Command::Bench(args) => bench::run(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            match &err {
                CliError::VerificationFailed => {}
                CliError::Usage(msg) => eprintln!("error: {msg}"),
                CliError::Io(msg) => eprintln!("error: {msg}"),
            }
            ExitCode::from(err.exit_code())
        }
    }
}
