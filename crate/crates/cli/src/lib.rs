//! Command-line front end for the `dunkl` crate.
//!
//! Exact values are read and written as `p/q` strings; polynomials use the
//! comma-separated coefficient form `c0,c1,...` (lowest degree first). Every JSON
//! document carries `"schema_version": 1`.

pub mod commands;
pub mod verify;

/// Exit code for bad arguments, parse errors and inadmissible parameters.
pub const EXIT_USAGE: i32 = 2;
/// Exit code when a verification or comparison finds a failure.
pub const EXIT_FAILURE: i32 = 1;

/// What a subcommand produced: text for stdout and the process exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    pub fn ok(stdout: String) -> Self {
        Output {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }

    pub fn usage(message: impl std::fmt::Display) -> Self {
        Output {
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
            code: EXIT_USAGE,
        }
    }
}
