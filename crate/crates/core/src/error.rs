use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input outside an operation's domain (n too small, isolated vertex, not a TDS, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// Malformed text or JSON input.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    /// A coloring or set does not match the universe it is checked against.
    #[error("coverage mismatch: {0}")]
    Coverage(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
