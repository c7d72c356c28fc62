//! Error type shared across the library.

use thiserror::Error;

/// Errors reported by graph construction, verification, exact search, and the
/// coloring constructions.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter lies outside an operation's stated domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A supplied coloring violates a precondition (wrong length, zero color,
    /// or not a proper coloring where one is required).
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    /// Exact search exceeded its node budget; no value is reported.
    #[error("search node budget of {budget} exhausted before completion")]
    BudgetExhausted { budget: u64 },

    /// No nonnegative integers alpha, beta satisfy alpha*a + beta*b = k.
    #[error("no decomposition of {k} as a nonnegative combination of {a} and {b}")]
    NoDecomposition { k: usize, a: usize, b: usize },

    /// A construction produced a coloring that failed its own verification.
    /// This indicates a bug, never a property of the input.
    #[error("certification failed: {0}")]
    CertificationFailed(String),

    /// The tile cache holds data that does not match what would be rebuilt.
    #[error("tile cache: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Shorthand for an invalid-parameter error.
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
