use thiserror::Error;

/// Errors raised by the algebra and its constructors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at evaluation: {0}")]
    PoleAtEvaluation(String),
    #[error("unexpected variable {0}")]
    UnexpectedVariable(&'static str),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("negative index {0}")]
    NegativeIndex(i64),
    #[error("invalid index: {0}")]
    InvalidIndex(String),
    #[error("product is not symmetric under x -> 1/x")]
    NotSymmetric,
    #[error("invalid partition ({0}, {1})")]
    InvalidPartition(i64, i64),
    #[error("not a horizontal strip: {0}")]
    NotHorizontalStrip(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
