//! Command-line errors and their exit codes.

use thiserror::Error;

/// Exit code for a passing run.
pub const EXIT_PASS: i32 = 0;
/// Exit code for a mathematical failure (an identity, axiom or
/// precondition that does not hold).
pub const EXIT_FAIL: i32 = 1;
/// Exit code for malformed input, schema violations and I/O errors.
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    /// The input could not be read or does not match its schema.
    #[error("{0}")]
    Input(String),

    /// The input is well formed but mathematically unacceptable.
    #[error("{0}")]
    Math(String),
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    pub fn math(msg: impl Into<String>) -> Self {
        CliError::Math(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Math(_) => EXIT_FAIL,
        }
    }
}

impl From<tlmp_core::Error> for CliError {
    fn from(e: tlmp_core::Error) -> Self {
        use tlmp_core::Error as E;
        match e {
            E::Dimension { .. } | E::Shape(_) | E::Invalid(_) => CliError::Input(e.to_string()),
            _ => CliError::Math(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(format!("I/O error: {e}"))
    }
}

pub type CliResult<T> = Result<T, CliError>;
