use thiserror::Error;

/// Failure classes surfaced by every public operation.
///
/// The variants map one-to-one onto the CLI exit codes, so callers should
/// not collapse them.
#[derive(Debug, Error)]
pub enum Error {
    /// Inputs violate a mathematical precondition (size mismatch, shape not
    /// contained, non-self-conjugate input, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// The request is well formed but exceeds a configured resource bound.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// A theorem-level invariant failed (non-integral structure constant,
    /// negative multiplicity, ...). Always a bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),

    /// A persisted character table failed validation.
    #[error("cache integrity failure: {0}")]
    Integrity(String),

    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

pub(crate) fn capacity<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Capacity(msg.into()))
}

pub(crate) fn internal<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Internal(msg.into()))
}
