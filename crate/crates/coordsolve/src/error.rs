use thiserror::Error;

/// Errors reported by the solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input such as an out-of-range index or a bad parameter vector.
    #[error("invalid argument: {0}")]
    Argument(String),
    /// The input is well formed but violates a solver precondition.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// The instance exceeds a configured budget.
    #[error("resource limit: {what} needs {size} units, budget is {budget}")]
    Resource {
        what: String,
        size: u128,
        budget: u64,
    },
    /// No object with the requested property exists.
    #[error("infeasible: {0}")]
    Infeasible(String),
    /// An internal consistency check failed.
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn resource(what: impl Into<String>, size: u128, budget: u64) -> Self {
        Error::Resource {
            what: what.into(),
            size,
            budget,
        }
    }
}
