use thiserror::Error;

/// Errors surfaced by the library.
///
/// `Capacity` names the configured bound so callers can report it;
/// `Internal` marks a broken internal invariant (a bug), never bad input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid tableau pair: {0}")]
    InvalidPair(String),

    #[error("invalid weight data: {0}")]
    InvalidWeight(String),

    #[error("infeasible swap: {0}")]
    InfeasibleSwap(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("capacity exceeded: {what} exceeds the configured bound of {bound}")]
    Capacity { what: String, bound: usize },

    #[error("internal consistency fault: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn capacity(what: impl Into<String>, bound: usize) -> Self {
        Error::Capacity { what: what.into(), bound }
    }
}
