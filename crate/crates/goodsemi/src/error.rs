use thiserror::Error;

use crate::lattice::Point;
use crate::semigroup::ValidationReport;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("axis {axis} out of range for dimension {dim}")]
    AxisOutOfRange { axis: usize, dim: usize },

    #[error("{lo} is not componentwise below {hi}")]
    NotComparable { lo: Point, hi: Point },

    #[error("point {point} is not a member")]
    NotMember { point: Point },

    #[error("ideals belong to different parent semigroups")]
    ParentMismatch,

    #[error("inner ideal is not contained in outer ideal")]
    NotSubset,

    #[error("operation requires a verified good ideal")]
    NotVerifiedGood,

    #[error("dimension {dim} exceeds the configured maximum {max}")]
    DimensionCap { dim: usize, max: usize },

    #[error("generators must be positive integers with gcd 1")]
    BadGenerators,

    #[error("budget exceeded: {what} needs {needed}, limit is {limit}")]
    BudgetExceeded {
        what: &'static str,
        needed: u64,
        limit: u64,
    },

    #[error("validation failed:\n{0}")]
    Invalid(ValidationReport),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("document error: {0}")]
    Document(String),

    #[error("rendering requires dimension 2, got {0}")]
    RenderDimension(usize),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
