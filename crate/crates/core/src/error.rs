//! Error type shared across the library.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Caller passed inconsistent or out-of-range data.
    #[error("rejected input: {0}")]
    Rejected(String),
    /// A configured resource bound (degree, order, enumeration size) was hit.
    #[error("resource bound exceeded: {0}")]
    Resource(String),
    /// Embedded data failed its self-check; indicates a corrupted build.
    #[error("internal consistency error: {0}")]
    Internal(String),
    /// Parse error with byte position.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn rejected(msg: impl Into<String>) -> Self {
        Error::Rejected(msg.into())
    }
    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }
    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
