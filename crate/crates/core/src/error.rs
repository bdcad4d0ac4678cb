use thiserror::Error;

/// A malformed braid word; `offset` is a byte offset into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(offset: usize, message: impl Into<String>) -> Self {
        Self {
            offset,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    /// An identity that must hold for every braid failed. Always a bug.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("triangle condition fails in row {row}: ({a}, {b}, {c})")]
    TriangleViolation {
        row: usize,
        a: String,
        b: String,
        c: String,
    },

    #[error("reconstruction mismatch: {0}")]
    ReconstructionMismatch(String),

    #[error("loop is a power of the boundary class y3 y2 y1")]
    BoundaryClass,

    /// The requested method does not apply to this braid.
    #[error("{0}")]
    Unsupported(String),
}

impl Error {
    /// True for errors caused by the input rather than by the engines.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::Parse(_) | Error::Unsupported(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
