use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("row index {n} out of range: must satisfy 1 <= n <= {cap}")]
    RowOutOfRange { n: u32, cap: u32 },

    #[error("degree mismatch: operator is built for degree {expected}, polynomial has degree {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix has non-integral entries")]
    NonIntegral,

    #[error("zero polynomial where a nonzero polynomial is required")]
    ZeroPolynomial,

    #[error("inexact polynomial division: {0}")]
    InexactDivision(String),

    #[error("{what} requires {parity} r, got r = {r}")]
    Parity {
        what: &'static str,
        parity: &'static str,
        r: u64,
    },

    #[error("insufficient data: need at least {required} terms to certify a recurrence of length {length}, have {available}")]
    InsufficientData {
        length: usize,
        required: usize,
        available: usize,
    },

    #[error("invalid range: {0}")]
    InvalidRange(String),

    #[error("resource limit: {0}")]
    ResourceLimit(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
