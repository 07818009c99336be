//! Library side of the `mrs` command-line tool.

pub mod commands;
pub mod json;
pub mod spec;

use thiserror::Error;

use mrs_core::GeometryError;

/// Failures surfaced by the CLI. Input problems exit with 1, geometric
/// failures with 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("spec: {0}")]
    Spec(String),
    #[error("io: {0}")]
    Io(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Spec(_) | CliError::Io(_) => 1,
            CliError::Geometry(_) => 2,
        }
    }
}
