use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("validation error: {0}")]
    Validation(String),
    #[error("not unicursal")]
    NotUnicursal,
    #[error("basepoint not on outer face")]
    BasepointNotOuter,
    #[error("invalid arguments: {0}")]
    InvalidArguments(String),
    #[error("invalid site: {0}")]
    InvalidSite(String),
    #[error("unsupported kind: {0}")]
    UnsupportedKind(String),
    #[error("budget exceeded after {0} steps")]
    BudgetExceeded(usize),
    #[error("input too large: {0}")]
    TooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}
