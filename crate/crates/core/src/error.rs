//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument violates a documented precondition or invariant.
    #[error("domain error: {0}")]
    Domain(String),

    /// Input is too small or empty for the requested estimator.
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// A numerical routine failed to converge or produced no result.
    #[error("numerical failure in {op} at iteration {iteration}: {detail}")]
    Numerical {
        op: &'static str,
        iteration: usize,
        detail: String,
    },

    /// A file or stream could not be decoded.
    #[error("parse error at byte {offset}: {detail}")]
    Parse { offset: u64, detail: String },

    /// Underlying I/O failure.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn degenerate(msg: impl Into<String>) -> Self {
        Error::Degenerate(msg.into())
    }
}

/// Crate-wide result alias.
pub type Result<T, E = Error> = std::result::Result<T, E>;
