//! Command-line front end: invariant computation, verification suites,
//! and knot-table handling with machine-readable output.

mod commands;
mod table;

pub use commands::{cmd_compute, cmd_table, cmd_verify, ComputeArgs, TableArgs, VerifyArgs};
pub use table::{builtin_table, load_table, parse_table, KnotTableEntry, BUILTIN_TABLE};

use clap::{Parser, Subcommand};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Input(_) => 2,
            CliError::Usage(_) => 64,
        }
    }
}

/// Exact state-sum link invariants on planar diagram codes.
#[derive(Debug, Parser)]
#[command(name = "skeinkit", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute an invariant of one diagram.
    Compute(ComputeArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Validate a knot table and report per-entry data.
    Table(TableArgs),
}

/// Parse arguments and run; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version itself with success
            if e.use_stderr() {
                eprint!("{e}");
                return 64;
            }
            print!("{e}");
            return 0;
        }
    };
    let result = match cli.command {
        Command::Compute(args) => cmd_compute(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Table(args) => cmd_table(&args),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
