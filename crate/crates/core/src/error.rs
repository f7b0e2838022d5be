use thiserror::Error;

/// Errors shared across the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid structure: {0}")]
    Invalid(String),
    #[error("truncation mismatch: {0} vs {1}")]
    TruncMismatch(usize, usize),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("{0} is not a subgroup of the given group")]
    InvalidSubgroup(String),
    #[error("enumeration budget exceeded after {spent} steps (budget {budget})")]
    BudgetExceeded { spent: u64, budget: u64 },
    #[error("Segal map at k = {k} is not a pi0 bijection; homotopy category is undefined without localization")]
    SegalFailure { k: usize },
    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}
