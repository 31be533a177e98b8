use thiserror::Error;

/// Errors surfaced by the library.
///
/// `Input` covers violated preconditions (wrong cardinality, unknown labels,
/// malformed orders). `Capacity` marks inputs beyond a documented search cap;
/// callers can retry with smaller parameters. `TheoremViolation` is reserved
/// for construction recipes whose success is guaranteed by a proved theorem:
/// if one ever fires on a verified input, the witness it carries is the
/// interesting part.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("capacity error: {0}")]
    Capacity(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }
}
