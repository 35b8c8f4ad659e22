use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("operation undefined on empty input: {0}")]
    EmptyInput(&'static str),

    #[error("invalid object: {0}")]
    Validity(String),

    #[error("shape {inner} is not contained in {outer}")]
    Containment { inner: String, outer: String },

    #[error("input is not quasisymmetric")]
    NotQuasisymmetric,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
