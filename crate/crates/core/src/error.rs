use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: {0}")]
    Arity(String),
    #[error("unsupported configuration: {0}")]
    UnsupportedConfiguration(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("integrality violation: {0}")]
    IntegralityViolation(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
