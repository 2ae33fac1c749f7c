//! Error type shared by parsers and evaluators.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum HoamError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("convergence failure: {0}")]
    Convergence(String),
    #[error("check failed: {0}")]
    CheckFailed(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, HoamError>;

impl HoamError {
    pub fn parse(msg: impl Into<String>) -> Self {
        HoamError::Parse(msg.into())
    }
    pub fn domain(msg: impl Into<String>) -> Self {
        HoamError::Domain(msg.into())
    }
    pub fn convergence(msg: impl Into<String>) -> Self {
        HoamError::Convergence(msg.into())
    }
}
