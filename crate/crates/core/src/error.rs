use std::io;

use thiserror::Error;

/// Errors raised by the spectrum coloring library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("generalized gcd is undefined for an all-zero interference matrix")]
    UndefinedGcd,

    #[error("instance too large: {space} colorings exceed the enumeration cap of {cap}")]
    InstanceTooLarge { space: String, cap: u64 },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid_param(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
