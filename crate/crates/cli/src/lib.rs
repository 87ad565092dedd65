//! Command-line front end for `maxsum-zeta`.
//!
//! The binary is a thin dispatcher; everything it prints is produced here so
//! integration tests can compare the emitted bytes with library results.

pub mod args;
pub mod compute;
pub mod records;
pub mod table;
pub mod verify;

use maxsum_zeta::ZetaError;
use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const VERIFY_FAILED: i32 = 1;
    pub const INVALID_ARGS: i32 = 2;
    pub const TOLERANCE_UNREACHABLE: i32 = 3;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid arguments: {0}")]
    InvalidArgs(String),
    #[error(transparent)]
    Numeric(#[from] ZetaError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Numeric(ZetaError::ToleranceUnreachable { .. }) => exit::TOLERANCE_UNREACHABLE,
            CliError::InvalidArgs(_) | CliError::Numeric(_) => exit::INVALID_ARGS,
            CliError::Io(_) | CliError::Json(_) => exit::VERIFY_FAILED,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
