use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("enumeration budget exceeded: {0}")]
    Budget(String),
    #[error("tree is not orientable at this d: {0}")]
    NotOrientable(String),
    #[error("opening mismatch: {0}")]
    OpeningMismatch(String),
    #[error("series error: {0}")]
    Series(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal error: {0}")]
    Internal(String),
}
