use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Error type shared by every module in this crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A caller violated a documented precondition (bad vertex, wrong shape,
    /// out-of-range parameter).
    #[error("invalid input: {0}")]
    Input(String),

    /// A configured resource ceiling (LP size, enumeration budget, search
    /// nodes) was exceeded before an answer was reached.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// Text or JSON input did not match the documented grammar.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
