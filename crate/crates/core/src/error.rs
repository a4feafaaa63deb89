use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("undecidable at precision {precision} bits: {what}")]
    Indeterminate { precision: usize, what: String },
    #[error("internal consistency failure: {0}")]
    Consistency(String),
    #[error("invalid skein triple: {0}")]
    InvalidTriple(String),
}

pub type Result<T> = std::result::Result<T, Error>;
