//! Front-end logic for the `difun` binary: rank tables, verification
//! suites, element export and rank reports.

pub mod enumerate;
pub mod rank;
pub mod tables;
pub mod verify;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Library(difun::Error),
}

impl From<difun::Error> for CliError {
    fn from(e: difun::Error) -> Self {
        match e {
            difun::Error::BudgetExceeded { .. } | difun::Error::GroundSetTooLarge(_) => {
                CliError::Budget(e.to_string())
            }
            other => CliError::Library(other),
        }
    }
}

impl CliError {
    /// `2` for bad input, `3` for budget overruns, `1` otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Io(_) => 1,
            CliError::Library(_) => 2,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
