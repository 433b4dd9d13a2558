use thiserror::Error;

/// Errors raised by the algebra and the combinatorial models.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("alphabet mismatch: {0}")]
    Alphabet(String),
    #[error("not divisible: {0}")]
    Divisibility(String),
    #[error("evaluation error: {0}")]
    Evaluation(String),
    #[error("structural error: {0}")]
    Structure(String),
    #[error("consistency error: {0}")]
    Consistency(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
