use thiserror::Error;

/// Errors raised by the library.
///
/// `Input` covers malformed algebras, out-of-range indices and misuse of
/// group-only checks. `Resource` is raised when a search would exceed one of
/// the configured [`Limits`](crate::Limits).
#[derive(Debug, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("resource cap exceeded: {what} (cap {cap})")]
    Resource { what: String, cap: usize },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn resource(what: impl Into<String>, cap: usize) -> Self {
        Error::Resource {
            what: what.into(),
            cap,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
