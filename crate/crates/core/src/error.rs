use thiserror::Error;

/// Errors shared by every solver, generator and file format in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or out-of-contract input.
    #[error("input error: {0}")]
    Input(String),

    /// A candidate object (witness, matching, assignment) failed validation.
    #[error("validation failed: {0}")]
    Validation(String),

    /// An exact search hit its node-count limit before finishing.
    #[error("node budget exhausted after {nodes} nodes")]
    BudgetExhausted { nodes: u64 },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    /// Process exit code for this error: 1 invalid, 2 budget, 3 input.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Validation(_) => 1,
            Error::BudgetExhausted { .. } => 2,
            Error::Input(_) | Error::Parse { .. } | Error::Io(_) | Error::Json(_) => 3,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
