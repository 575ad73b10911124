//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{function}: expected {expected} dimensions, got {got}")]
    DimensionMismatch {
        function: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("non-finite value in {context}")]
    NonFinite { context: &'static str },

    #[error("{0} requires an explicit noise source; use evaluate_with")]
    NoiseSourceRequired(&'static str),

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("unknown algorithm id `{0}`")]
    UnknownAlgorithm(String),

    #[error("unknown function id `{0}`")]
    UnknownFunction(String),

    #[error("algorithm `{0}` is not implemented — external reference")]
    ExternalAlgorithm(&'static str),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
