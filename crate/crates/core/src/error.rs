use thiserror::Error;

/// Errors raised by the library.
///
/// `Internal` marks a broken algebraic identity (a failed exact division
/// that must succeed, a parity check in the degree 5 algorithm, ...). It
/// signals a bug rather than bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not alternating")]
    NotAlternating,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: u8, found: u8 },

    #[error("unsupported degree {degree} for {what}")]
    UnsupportedDegree { degree: u8, what: &'static str },

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("invalid transformation: {0}")]
    InvalidTransformation(String),

    #[error("singular model has no Jacobian (discriminant is zero)")]
    Singular,

    #[error("point does not lie on the curve")]
    PointNotOnCurve,

    #[error("point is a singular point of the curve (Jacobian rank {0} < 3)")]
    SingularPoint(usize),

    #[error("projection is degenerate: {0}")]
    DegenerateProjection(String),

    #[error("model has non-integer coefficients")]
    NonInteger,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
