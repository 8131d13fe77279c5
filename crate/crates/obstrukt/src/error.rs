use thiserror::Error;

/// Errors surfaced by the library. The CLI maps these onto exit codes:
/// invalid input -> 2, exhausted degeneracy budgets -> 3.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("degeneracy budget exhausted: {0}")]
    DegeneracyBudget(String),

    #[error("hypothesis violation: {0}")]
    HypothesisViolation(String),

    #[error("internal invariant failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
