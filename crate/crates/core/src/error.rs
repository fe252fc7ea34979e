use thiserror::Error;

/// Errors raised by the library. Parse failures carry the 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    UndefinedGcd,
    #[error("partitions of different ground sets ({0} vs {1})")]
    GroundSetMismatch(usize, usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("the ground set must be nonempty")]
    EmptyGroundSet,
    #[error("state covers {got} crossings, diagram has {expected}")]
    StateMismatch { expected: usize, got: usize },
    #[error("boundary mismatch: {0}")]
    BoundaryMismatch(String),
    #[error("partition {0} is crossing")]
    CrossingPartition(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("refusing to build a matrix for n = {0} without the size override")]
    SizeGuard(usize),
    #[error("{0}")]
    Io(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
