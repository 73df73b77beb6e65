use thiserror::Error;

/// Errors surfaced at the API boundary: malformed construction data,
/// arguments outside an operation's domain, or unparsable input text.
///
/// Violations of the numbered construction conditions are *not* errors;
/// validators return them as data (see [`crate::config::Violation`]).
#[derive(Debug, Error)]
pub enum Error {
    #[error("config error: {0}")]
    Config(String),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub(crate) fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }
}
