use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Caller supplied an argument that does not fit the operation.
    #[error("usage error: {0}")]
    Usage(String),
    /// The requested instance exceeds a configured size limit.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    /// A hypothesis required by the operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A function could not be put in one of the expected closed forms.
    #[error("classification error: {0}")]
    Classification(String),
    /// A fact that should hold unconditionally did not.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Usage(msg.into()))
}

pub(crate) fn capacity<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Capacity(msg.into()))
}
