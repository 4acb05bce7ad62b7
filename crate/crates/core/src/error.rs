use thiserror::Error;

/// Errors raised by the library.
///
/// The variants map one-to-one onto the command-line exit codes: parse
/// errors are usage errors (2), domain and resource errors are input
/// problems (3), and property failures mean an identity that must hold did
/// not (4).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("resource limit: {0}")]
    Resource(String),
    #[error("property failure: {0}")]
    Property(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn property(msg: impl Into<String>) -> Self {
        Error::Property(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
