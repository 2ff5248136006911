use thiserror::Error;

/// Errors raised by the exact-arithmetic core.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series has a nonzero constant term; exp/log1p need a zero constant term")]
    NonZeroConstantTerm,

    #[error("coefficient index {index} exceeds series order {order}")]
    CoefficientOutOfRange { index: usize, order: usize },

    #[error("expected {expected} argument(s), got {got}")]
    ArgumentLength { expected: usize, got: usize },

    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),

    #[error("invalid polynomial literal {0:?}")]
    InvalidPolynomial(String),
}

pub type Result<T> = std::result::Result<T, Error>;
