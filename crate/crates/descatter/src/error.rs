use std::path::PathBuf;

/// Errors produced by construction, validation, and I/O across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("radial profile must have at least 2 samples, got {0}")]
    ProfileTooShort(usize),

    #[error("{0} contains a non-finite value")]
    NonFinite(&'static str),

    #[error("expected a square odd-sided image of side 2N-1 (N >= 2), got {height}x{width}")]
    BadImageShape { height: usize, width: usize },

    #[error("kernel side must be odd, got {0}")]
    EvenKernel(usize),

    #[error("kernel side {kernel} exceeds twice the image side {image}")]
    KernelTooLarge { kernel: usize, image: usize },

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("operator is degenerate: diag(A^T A 1) has a non-positive entry at index {0}")]
    DegenerateOperator(usize),

    #[error("objective is non-finite at the starting point")]
    NonFiniteObjective,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn json(path: impl Into<PathBuf>, source: serde_json::Error) -> Self {
        Error::Json {
            path: path.into(),
            source,
        }
    }
}
