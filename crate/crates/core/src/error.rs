use thiserror::Error;

/// Errors produced by the sequence-transform engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot combine elements of Q(sqrt {left}) and Q(sqrt {right})")]
    FieldMismatch { left: u64, right: u64 },

    #[error("radicand {0} is not a square-free integer greater than 1")]
    InvalidRadicand(u64),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("degree bound {bound} is smaller than the polynomial degree {degree}")]
    DegreeBound { bound: usize, degree: usize },

    #[error("characteristic polynomial must be monic of degree at least 1")]
    NotMonic,

    #[error("expected {expected} initial terms, got {got}")]
    InitLength { expected: usize, got: usize },

    #[error("generating function denominator must have constant term 1")]
    InvalidDenominator,

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("alpha + y must be nonzero")]
    Pole,

    #[error("zeros do not match the characteristic polynomial")]
    ZerosMismatch,

    #[error("sequence is not an impulse sequence")]
    NotImpulse,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    /// Shift the reported position of a parse error by `offset`.
    pub(crate) fn offset(self, offset: usize) -> Self {
        match self {
            Error::Parse { pos, msg } => Error::Parse {
                pos: pos + offset,
                msg,
            },
            other => other,
        }
    }
}
