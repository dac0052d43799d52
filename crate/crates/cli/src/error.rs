use std::path::PathBuf;

use thiserror::Error;

/// Exit codes: 0 ok, 1 internal invariant breach, 2 usage, 3 claim-check failure.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] qhslab::Error),
    #[error("cannot read {}: {source}", path.display())]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("invalid instance file {}: {source}", path.display())]
    Instance {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error("cannot write {}: {source}", path.display())]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Invariant(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(qhslab::Error::NormalizationBreach { .. })
            | CliError::Invariant(_)
            | CliError::Write { .. } => 1,
            CliError::Usage(_)
            | CliError::Core(_)
            | CliError::Read { .. }
            | CliError::Instance { .. } => 2,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
