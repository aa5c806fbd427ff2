use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    /// A documented precondition of an operation was violated.
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    /// The oracle refused to run because the instance is larger than the
    /// configured budget. Never a silent wrong answer.
    #[error("oracle budget exceeded for {what}: requested size {requested}, limit {limit} (raise with --budget or --force)")]
    BudgetExceeded {
        what: &'static str,
        requested: u64,
        limit: u64,
    },

    /// The input lies in the exceptional set, where no positivity statement exists.
    #[error("{0} is in the exceptional set {{(1),(1,1),(1^4),(1^6),(2,1),(3,1)}}")]
    Exceptional(String),

    #[error("certificate verification failed: {0}")]
    Verification(String),

    #[error("character value overflowed 128-bit arithmetic")]
    Overflow,

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
