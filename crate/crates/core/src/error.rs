use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// An explicit resource bound was exceeded; the computation was not run
    /// to completion and no verdict is implied.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    #[error("invalid parameters: {0}")]
    Parameter(String),

    #[error("invalid input: {0}")]
    Input(String),

    /// A construction cannot produce the requested object at these parameters.
    #[error("infeasible: {0}")]
    Infeasible(String),

    /// A search ran out of budget; `partial` describes what was established.
    #[error("search budget exhausted: {partial}")]
    Budget { partial: String },

    #[error("integrity check failed: {0}")]
    Integrity(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parameter(msg: impl Into<String>) -> Error {
    Error::Parameter(msg.into())
}
