//! Command-line front end for `ripcert`: file formats, reports, and the
//! `construct`, `certify`, `graph` and `mc` commands.
//!
//! Exit codes: 0 success, 1 other errors, 2 an invariant check failed,
//! 3 an enumeration budget was exceeded, 4 the input is infeasible for the
//! requested operation.

pub mod args;
mod commands;
pub mod error;
pub mod format;
pub mod report;

pub use args::Cli;
pub use error::{exit, CliError};

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    match commands::execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
