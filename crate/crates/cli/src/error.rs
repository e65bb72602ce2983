use thiserror::Error;

use polyzero_core::{BoundError, OracleError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    NoHypothesis(String),
    #[error("{0}")]
    Oracle(String),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("{0} bound violation(s) found")]
    Violations(usize),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Violations(_) => 1,
            CliError::Input(_) => 2,
            CliError::NoHypothesis(_) => 3,
            CliError::Oracle(_) => 4,
            CliError::Io(_) => 5,
        }
    }
}

impl From<BoundError> for CliError {
    fn from(e: BoundError) -> Self {
        match e {
            BoundError::HypothesisNotSatisfied(_) | BoundError::NoHypothesisApplies => {
                CliError::NoHypothesis(e.to_string())
            }
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::BadRadius(_) => CliError::Input(e.to_string()),
            _ => CliError::Oracle(e.to_string()),
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        match e.into_kind() {
            csv::ErrorKind::Io(io) => CliError::Io(io),
            other => CliError::Io(std::io::Error::other(format!("{other:?}"))),
        }
    }
}
