use thiserror::Error;

/// Errors raised by ideal, fiber and poset operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("exponent arithmetic overflowed 64 bits")]
    Overflow,
    #[error("matrix column {0} is zero")]
    ZeroColumn(usize),
    #[error("malformed matrix: {0}")]
    MalformedMatrix(String),
    #[error("ideal is not artinian")]
    NotArtinian,
    #[error("operation undefined for the {0} ideal")]
    DegenerateIdeal(&'static str),
    #[error("{count} generators exceeds the inclusion-exclusion limit of {limit}")]
    TooManyGenerators { count: usize, limit: usize },
    #[error("fiber over {0:?} is empty")]
    EmptyFiber(Vec<u64>),
    #[error("degrees do not add up: {b1:?} + {b2:?} != {b:?}")]
    DegreeMismatch { b: Vec<u64>, b1: Vec<u64>, b2: Vec<u64> },
    #[error("coefficient {0} is zero")]
    ZeroCoefficient(usize),
    #[error("point set is empty")]
    EmptyPointSet,
    #[error("invalid poset element ({0}, {1}): need i < j")]
    InvalidElement(u64, u64),
    #[error("elements {0:?} and {1:?} are comparable")]
    NotAntichain((u64, u64), (u64, u64)),
    #[error("point set is not downward closed: {0:?} is missing")]
    NotDownwardClosed(Vec<u64>),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
