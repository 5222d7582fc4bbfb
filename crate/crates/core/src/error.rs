use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("enumeration is limited to n <= {max}, got n = {n}")]
    EnumerationGuard { n: usize, max: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not lower unitriangular: {0}")]
    NotUnitriangular(String),

    #[error("exact division failed: {0}")]
    NotDivisible(String),
}

pub type Result<T> = std::result::Result<T, Error>;
