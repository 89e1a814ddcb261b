use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("operands live in different ring contexts")]
    ContextMismatch,
    #[error("variable {0} is not part of this ring context")]
    ForeignVariable(String),
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("shape error: {0}")]
    Shape(String),
    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),
    #[error("parameter error: {0}")]
    Parameter(String),
    #[error("field error: {0}")]
    Field(String),
    #[error("division is not exact")]
    InexactDivision,
    #[error("resource budget of {limit} monomial operations exhausted")]
    Budget { limit: u64 },
    #[error("exponent overflow")]
    ExponentOverflow,
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
