use thiserror::Error;

/// Errors produced by solvers, reductions and the instance layer.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on the input was violated (bad index, k out of range,
    /// malformed geometry, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The input is well-formed but exceeds a configured enumeration budget.
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    /// An internal guarantee did not hold; signals a bug in a caller-supplied
    /// solver or in a construction.
    #[error("contract violation: {0}")]
    ContractViolation(String),

    /// One or more schema violations found while validating an instance file.
    #[error("schema violation(s): {}", .0.join("; "))]
    Schema(Vec<String>),

    /// A result file does not certify against its instance.
    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn budget(msg: impl Into<String>) -> Self {
        Error::BudgetExceeded(msg.into())
    }

    pub fn contract(msg: impl Into<String>) -> Self {
        Error::ContractViolation(msg.into())
    }
}
