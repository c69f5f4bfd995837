//! Crate error type.

use thiserror::Error;

/// Errors shared by the kernel, the estimate layer and the mesh pipeline.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument left the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Parameter set rejected by validation.
    #[error("invalid parameters: {0}")]
    Params(String),

    /// A precondition of a bound or estimate does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// Mesh failed structural validation.
    #[error("invalid mesh: {0}")]
    Mesh(String),

    /// Structure data rejected before inequality checking.
    #[error("invalid structure data: {0}")]
    Structure(String),

    /// A numerical routine could not certify its own accuracy.
    #[error("inconclusive: {0}")]
    Inconclusive(String),

    /// Malformed input document (CSV, OFF, OBJ or config).
    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn params(msg: impl Into<String>) -> Self {
        Error::Params(msg.into())
    }

    pub(crate) fn mesh(msg: impl Into<String>) -> Self {
        Error::Mesh(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
