use thiserror::Error;

/// Errors reported by the generator and its supporting arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported field degree {0} (supported: 1..=127)")]
    UnsupportedDegree(usize),

    #[error("field degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },

    #[error("value {bits:#x} does not fit in a field of degree {degree}")]
    ElementOutOfRange { bits: u128, degree: usize },

    #[error("{what}: expected {expected} bits, got {got}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("invalid parameter set: {0}")]
    InvalidParams(String),

    #[error("malformed key file: {0}")]
    KeyFormat(String),

    #[error("embedding needs m >= n, got m = {m}, n = {n}")]
    EmbeddingTooWide { m: usize, n: usize },

    #[error("entropy source failure: {0}")]
    Entropy(String),
}

pub type Result<T> = std::result::Result<T, Error>;
