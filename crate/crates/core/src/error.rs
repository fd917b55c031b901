use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("gcd({m}, {d}) = {gcd} is not 1; use the Bizley series instead")]
    NotCoprime { m: u64, d: u64, gcd: u64 },

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("path leaves the region below the diagonal after prefix {prefix:?}")]
    AboveDiagonal { prefix: String },

    #[error("malformed matrix: {0}")]
    MalformedMatrix(String),

    #[error("matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("not a rational Dyck positroid: {0}")]
    NotRationalDyck(String),

    #[error("malformed plabic graph: {0}")]
    MalformedGraph(String),

    #[error("plabic graph admits no perfect orientation")]
    NotOrientable,

    #[error("move not applicable: {0}")]
    MoveNotApplicable(String),

    #[error("linear program is unbounded")]
    Unbounded,

    #[error("unknown {kind} `{name}`")]
    UnknownStrategy { kind: &'static str, name: String },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
