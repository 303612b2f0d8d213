use thiserror::Error;

/// Errors raised by the library. Variants map onto the CLI exit codes.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    Invariant(String),

    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("phi' is undefined at {0}")]
    Undefined(String),

    #[error("{0} has no exact rational evaluation")]
    NotExact(String),

    #[error("cost guard exceeded: {0}")]
    CostGuard(String),

    #[error("expression too large: {0}")]
    TooLarge(String),

    #[error("Newton iterations did not stabilize within {cap} steps")]
    NoStabilization { cap: usize },

    #[error("non-finite value in numeric iteration")]
    NonFinite,
}

pub type Result<T> = std::result::Result<T, Error>;
