use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("parity violation: {0}")]
    Parity(String),
    #[error("singular linear system: {0}")]
    Singular(String),
    #[error("not a polynomial: {0}")]
    NotPolynomial(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("route mismatch: {0}")]
    RouteMismatch(String),
    #[error("inexact division: {0}")]
    Inexact(String),
}

pub type Result<T> = std::result::Result<T, Error>;
