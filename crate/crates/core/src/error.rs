use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division is not exact in the coefficient ring")]
    NonExactDivision,

    #[error("division by zero")]
    DivisionByZero,

    #[error("series orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("series constant term is not 1")]
    NonUnitConstantTerm,

    #[error("matrix dimension {n} exceeds the limit of {max}")]
    DimensionTooLarge { n: usize, max: usize },

    #[error("matrix is not square")]
    NotSquare,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
