use thiserror::Error;

/// Errors shared by every norm kernel.
#[derive(Debug, Error)]
pub enum Error {
    /// Input outside the operation's admissible domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// An exhaustive search would exceed its declared budget.
    #[error("budget exceeded: {0}")]
    Budget(String),

    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),

    /// A subtraction of counts would go below zero.
    #[error("count underflow: {0}")]
    Underflow(String),

    /// Unknown suite name or bad invocation.
    #[error("usage error: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn budget(msg: impl Into<String>) -> Self {
        Error::Budget(msg.into())
    }

    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }
}
