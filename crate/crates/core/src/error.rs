use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty point set")]
    EmptyInput,
    #[error("mixed dimensions: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("malformed linear system: {0}")]
    MalformedSystem(String),
    #[error("points do not affinely span R^{dim} (affine dimension {affine})")]
    Degenerate { dim: usize, affine: usize },
    #[error("duplicate point at indices {0} and {1}")]
    DuplicatePoint(usize, usize),
    #[error("invalid pair ({0}, {1})")]
    InvalidPair(usize, usize),
    #[error("index {index} out of range for {len} points")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("point {0} is not a vertex of the convex hull")]
    NotAVertex(usize),
    #[error("parameter out of range: {0}")]
    Range(String),
    #[error("{0} did not verify within {1} attempts")]
    RetryCapExceeded(String, usize),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("no verifiable candidate found: {0}")]
    SearchFailed(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
