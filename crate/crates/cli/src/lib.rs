//! The `bgmu` command line: argument handling lives in `main.rs`, everything
//! that produces output lives here so it can be tested without a process.

pub mod commands;
pub mod spec;
pub mod verify;

use std::fmt;

/// Exit status 1 for bad input, 2 when a verification fails.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Mismatch(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Mismatch(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(s) | CliError::Mismatch(s) => f.write_str(s),
        }
    }
}

impl From<bgmu_core::Error> for CliError {
    fn from(e: bgmu_core::Error) -> Self {
        match e {
            bgmu_core::Error::Verification(_) => CliError::Mismatch(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}
