use thiserror::Error;

/// Errors raised by the exact engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a knot: {0}")]
    InvalidKnot(String),

    #[error("matrix is singular")]
    Singular,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid continued fraction input {num}/{den}")]
    ContinuedFraction { num: i64, den: i64 },

    #[error("invalid plumbing graph: {0}")]
    InvalidGraph(String),

    #[error("plumbing not negative-definite")]
    NotNegativeDefinite,

    #[error("unsupported computation: {0}")]
    Unsupported(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
