use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element does not belong to ring {0}")]
    ForeignElement(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("enumeration is undefined at index {0}")]
    UndefinedIndex(u64),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("quotient is trivial: 1 lies in the maximal ideal")]
    TrivialQuotient,
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("division by the zero polynomial (or by a non-invertible leading coefficient)")]
    DivisionByZeroPoly,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
