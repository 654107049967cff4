use thiserror::Error;

/// Errors produced by the sequence, decomposition and search routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid base {0}: base must be at least 2")]
    InvalidBase(u64),

    #[error("arithmetic overflow: result exceeds 2^63 - 1")]
    Overflow,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("search cap {cap} exhausted without a result")]
    CapExhausted { cap: u64 },

    #[error("instance too large for exhaustive search: {points} points (limit {limit})")]
    TooLarge { points: u64, limit: u64 },

    #[error("mismatch: {0}")]
    Mismatch(String),

    #[error("internal identity violated: {0}")]
    Identity(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
