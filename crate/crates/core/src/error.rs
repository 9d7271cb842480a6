use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative argument {name} = {value}")]
    NegativeArgument { name: &'static str, value: i64 },

    #[error("series is not invertible: divisor has zero constant term but dividend does not")]
    NonInvertible,

    #[error("exp requires a zero constant term")]
    ExpConstantTerm,

    #[error("log requires constant term 1")]
    LogConstantTerm,

    #[error("target ({x}, {y}) is not reachable inside the boundary region")]
    Unreachable { x: i64, y: i64 },

    #[error("path has {found} north steps, expected {expected}")]
    WrongNorthCount { expected: usize, found: usize },

    #[error("invalid path literal {0:?}")]
    PathSyntax(String),

    #[error("lower partition is not dominated by the upper one")]
    NotDominated,

    #[error("partitions have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),

    #[error("width {width} exceeds the enumeration guard {limit}")]
    TooLarge { width: usize, limit: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("matrix is not square")]
    NotSquare,

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}
