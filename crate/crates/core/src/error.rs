use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Extents, splits or contracted axes do not line up.
    #[error("shape error: {0}")]
    Shape(String),

    /// A numerical routine failed (SVD did not converge, non-finite input).
    #[error("numeric error: {0}")]
    Numeric(String),

    /// An operand does not satisfy the algebraic precondition of an operation,
    /// e.g. a supposed {1}-inverse that fails the first Penrose equation.
    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("format error: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
