//! File formats, configuration, parallel sweeps and the `crlh` command line
//! for [`crlh_core`].

pub mod cli;
pub mod config;
pub mod engine;
pub mod figure;
pub mod output;

use std::path::PathBuf;

/// Failures surfaced by the command line.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad flags or configuration.
    #[error("{0}")]
    Usage(String),
    /// Model, search or sweep failure.
    #[error(transparent)]
    Model(#[from] crlh_core::Error),
    /// Reading or writing a file failed.
    #[error("{path}: {source}")]
    Io {
        /// File involved.
        path: PathBuf,
        /// Underlying error.
        source: std::io::Error,
    },
    /// A configuration file was not valid JSON for the schema.
    #[error("{path}: {source}")]
    Config {
        /// File involved.
        path: PathBuf,
        /// Underlying error.
        source: serde_json::Error,
    },
}

impl CliError {
    /// Process exit code: 2 for usage and validation, 3 for numeric failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Model(e) if e.is_numeric() => 3,
            _ => 2,
        }
    }
}

/// Shorthand result type.
pub type Result<T> = std::result::Result<T, CliError>;
