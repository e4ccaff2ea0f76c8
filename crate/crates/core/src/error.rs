use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A requested construction would exceed a configured size cap.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// The solver's node budget ran out before a decision was reached.
    #[error("search budget exhausted after {nodes} nodes")]
    BudgetExhausted { nodes: u64 },

    /// A caller-supplied value contradicts a recomputed one.
    #[error("inconsistent input: {0}")]
    Inconsistent(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }
}
