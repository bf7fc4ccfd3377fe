use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("parse error in `{input}`: {message}")]
    Parse { input: String, message: String },
    #[error("expression is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("degree {degree} exceeds the truncation degree {truncation}")]
    DegreeOverflow { degree: usize, truncation: usize },
    #[error("ideals or modules belong to different algebras")]
    OwnerMismatch,
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("insufficient truncation headroom: {0}")]
    Truncation(String),
    #[error("modular reduction failed: {0}")]
    Modular(String),
    #[error("computation budget exceeded: {0}")]
    Budget(String),
}

pub type Result<T> = std::result::Result<T, Error>;
