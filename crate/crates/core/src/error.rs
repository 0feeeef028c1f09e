use thiserror::Error;

/// Why a sequence of integers is not a Hessenberg function.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HessenbergError {
    #[error("empty: a Hessenberg function needs at least one value")]
    Empty,
    #[error("not-above-diagonal: h({position}) = {value} < {position}")]
    NotAboveDiagonal { position: usize, value: i64 },
    #[error("not-weakly-increasing: h({next}) = {value} < h({position}) = {previous}", next = position + 1)]
    NotWeaklyIncreasing {
        position: usize,
        previous: i64,
        value: i64,
    },
    #[error("out-of-range: h({position}) = {value} exceeds n = {n}")]
    OutOfRange {
        position: usize,
        value: i64,
        n: usize,
    },
}

impl HessenbergError {
    /// Short machine-readable tag for diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            HessenbergError::Empty => "empty",
            HessenbergError::NotAboveDiagonal { .. } => "not-above-diagonal",
            HessenbergError::NotWeaklyIncreasing { .. } => "not-weakly-increasing",
            HessenbergError::OutOfRange { .. } => "out-of-range",
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("invalid Hessenberg function: {0}")]
    Hessenberg(#[from] HessenbergError),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("not-zero-dimensional: the quotient ring is infinite-dimensional")]
    NotZeroDimensional,

    #[error("unknown check: {0}")]
    UnknownCheck(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::ResourceLimit(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
