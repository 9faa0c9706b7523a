use thiserror::Error;

/// Errors raised by the exact-arithmetic layer and the engines built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("continued fraction has no partial quotients")]
    EmptyContinuedFraction,

    #[error("invalid partial quotient {value} at position {index}")]
    InvalidPartialQuotient { index: usize, value: String },

    #[error("enclosure too wide to certify {digits} digits; refine the enclosure")]
    EnclosureTooWide { digits: usize },

    #[error("interval endpoints out of order: {lo} > {hi}")]
    InvertedInterval { lo: String, hi: String },

    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}
