use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("elements belong to different fields (orders {left} and {right})")]
    FieldMismatch { left: u64, right: u64 },

    #[error("rotation {rot} is not allowed for order {order}: {reason}")]
    InvalidRotation {
        order: u64,
        rot: u64,
        reason: &'static str,
    },

    #[error("symplectic case has no curve term")]
    SymplecticCurveTerm,

    #[error("inconsistent fixed-point data: {0}")]
    InconsistentType(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("exact division left a nonzero remainder")]
    InexactDivision,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
