//! Verification reports, checkpointed enumeration and subcommands for the
//! `kfree` binary.

pub mod app;
pub mod commands;
pub mod report;
pub mod resume;
pub mod verify;

use kfree_core::graph::EnumerationError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Resource(String),
    #[error("format error: {0}")]
    Format(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("assertion failed: {0}")]
    Mismatch(String),
}

impl From<EnumerationError> for CliError {
    fn from(e: EnumerationError) -> Self {
        CliError::Resource(e.to_string())
    }
}

impl CliError {
    /// 1 for mathematical mismatches, 2 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Mismatch(_) => 1,
            _ => 2,
        }
    }
}
