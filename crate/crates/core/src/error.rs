use thiserror::Error;

use crate::MAX_DIM;

/// Errors raised by the library. Verification failures are never errors;
/// they are reported as entries of a [`crate::report::Report`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("pole at H = {at}")]
    Pole { at: String },

    #[error("coefficient has a pole on the degree-{degree} component (H = {eigenvalue})")]
    PoleAtDegree { degree: usize, eigenvalue: String },

    #[error("operands live over different metrics")]
    ContextMismatch,

    #[error("index {index} is out of range for n = {n} (indices are 1-based)")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("invalid metric: {0}")]
    InvalidMetric(String),

    #[error("invalid dimension: {0}")]
    InvalidDimension(String),

    #[error("dimension {0} exceeds the supported maximum of {MAX_DIM}")]
    DimensionTooLarge(usize),

    #[error("input is not annihilated by the Dirac operator")]
    NotASolution,

    #[error("tilde operators need 1 - n/2 != 0, so n = 2 is rejected")]
    TildeUndefined,

    #[error("bracket expects {expected} indices, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("every tested component hit a pole; equality is undecided")]
    Indeterminate,

    #[error("input is zero")]
    ZeroInput,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
