use std::path::PathBuf;

use thiserror::Error;

/// Failures of a CLI run, each with its own process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot parse config: {0}")]
    Parse(String),

    #[error("invalid config: {0}")]
    Validation(String),

    #[error("numerical failure: {0}")]
    Numeric(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("table does not fit the {kind} layout: {reason}")]
    Schema { kind: &'static str, reason: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 3,
            CliError::Validation(_) => 4,
            CliError::Numeric(_) => 5,
            CliError::Io { .. } => 6,
            CliError::Schema { .. } => 1,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}

impl From<normdyn_core::Error> for CliError {
    fn from(e: normdyn_core::Error) -> Self {
        match e {
            normdyn_core::Error::DegenerateCondition { .. } | normdyn_core::Error::SpecialFunction(_) => {
                CliError::Numeric(e.to_string())
            }
            _ => CliError::Validation(e.to_string()),
        }
    }
}
