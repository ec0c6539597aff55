//! Command-line front end: the ring-spec language, report rendering and
//! the `wgamma` subcommands.

pub mod commands;
pub mod parse;
pub mod report;

use thiserror::Error;

pub use commands::{run, Cli, Command, Outcome};
pub use parse::{format_ring_spec, parse_ring_spec, ParseError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Domain(#[from] wgamma_core::Error),
}

impl CliError {
    /// 1 domain error, 2 parse error, 3 cap exceeded.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Domain(wgamma_core::Error::CapExceeded { .. })
            | CliError::Domain(wgamma_core::Error::TooLarge { .. }) => 3,
            CliError::Domain(_) => 1,
        }
    }
}
