use thiserror::Error;

/// Errors raised by the library. Rejections of candidate parameter sets are
/// not errors; they are recorded in check reports.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("load error at row {row}: {msg}")]
    Load { row: usize, msg: String },

    #[error("subset enumeration needs {required} subsets but the cap is {cap}")]
    CapExceeded { required: u128, cap: u128 },

    #[error("data file {path}: {msg}")]
    Data { path: String, msg: String },

    #[error("invalid design: {0}")]
    Design(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
