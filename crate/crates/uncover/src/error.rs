use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("degenerate instance: {0}")]
    Degenerate(String),

    #[error("invalid instance at {path}: {message}")]
    Invalid { path: String, message: String },

    #[error("invalid rational {input:?}: {reason}")]
    Rational { input: String, reason: &'static str },

    #[error("{0}")]
    Json(String),

    #[error("search budget of {budget} nodes exhausted; optimum lies in [{lower}, {upper}]")]
    BudgetExhausted { budget: u64, lower: usize, upper: usize },

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("csv output failed: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn contract(msg: impl Into<String>) -> Error {
    Error::Contract(msg.into())
}

pub(crate) fn invalid(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Invalid { path: path.into(), message: message.into() }
}
