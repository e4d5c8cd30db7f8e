use thiserror::Error;

/// Failure categories shared by every operation in the crate.
///
/// The categories line up with the CLI exit codes: usage errors are caller
/// mistakes (mismatched lengths or fields), parse errors come from text input,
/// domain errors are mathematically invalid requests, and resource errors are
/// exhaustive computations that would exceed their budget.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("resource limit exceeded: {0}")]
    Resource(String),
}

impl Error {
    /// The message without its category prefix.
    pub fn message(&self) -> &str {
        match self {
            Error::Usage(m) | Error::Parse(m) | Error::Domain(m) | Error::Resource(m) => m,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Usage(msg.into()))
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

pub(crate) fn parse<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse(msg.into()))
}
