use thiserror::Error;

use crate::algebra::BasisIndex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("usage: {0}")]
    Usage(String),

    #[error("central generator {0} is not allowed in centerless mode")]
    CentralInCenterless(BasisIndex),

    #[error("invalid r-matrix: {0}")]
    InvalidR(String),

    #[error("degenerate r-matrix: {0}")]
    DegenerateR(String),

    #[error("invalid recurrence: {0}")]
    InvalidRecurrence(String),

    #[error("window {window} too small: {reason}")]
    WindowTooSmall { window: i64, reason: String },

    #[error("unknown check `{0}`")]
    UnknownCheck(String),

    #[error("malformed parameter `{key}`: {reason}")]
    BadParam { key: String, reason: String },

    #[error("column {column}: {message}")]
    Parse { column: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
