use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid tuple: {0}")]
    InvalidTuple(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("shape mismatch: {0}")]
    ShapeError(String),
    #[error("parse error at byte {pos}: {msg}")]
    ParseError { pos: usize, msg: String },
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::ParseError {
            pos,
            msg: msg.into(),
        }
    }
}
