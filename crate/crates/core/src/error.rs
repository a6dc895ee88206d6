//! Error types shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors surfaced by the arithmetic kernels and counting operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An input lies outside an operation's domain: wrong sign, wrong
    /// coprimality structure, or an unsupported size. The message names the
    /// offending values.
    #[error("domain error: {0}")]
    Domain(String),

    /// An input is below the applicability threshold of the requested
    /// operation; the message names the threshold.
    #[error("precondition not met: {0}")]
    Precondition(String),

    /// Checked 128-bit arithmetic overflowed. Callers of the public API never
    /// see this variant: it is the internal signal to redo the computation at
    /// arbitrary precision.
    #[error("arithmetic overflow in 128-bit evaluation")]
    Overflow,

    /// An internal algebraic invariant failed. This indicates a bug in the
    /// crate, not bad input.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
