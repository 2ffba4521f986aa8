use std::path::PathBuf;

/// Errors produced by the scoring library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("point set is empty")]
    EmptyPointSet,

    #[error("points must have at least one coordinate")]
    ZeroDimension,

    #[error("row {row} has {found} coordinates, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("non-finite coordinate at row {row}, column {column}")]
    NonFinite { row: usize, column: usize },

    #[error("invalid mu = {mu}: must satisfy 1 <= mu <= {max} for {n} points")]
    InvalidMu { mu: usize, max: usize, n: usize },

    #[error("length mismatch: {what} has {found} entries, expected {expected}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("index {index} out of range for {n} points")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("invalid label {label} at index {index}: cluster labels must be >= 0 and noise is -1")]
    InvalidLabel { index: usize, label: i64 },

    #[error("contract violated: {0}")]
    Contract(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("undefined correlation: {0}")]
    UndefinedCorrelation(&'static str),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: line {line}, column {column}: {message}")]
    Parse {
        path: PathBuf,
        line: u64,
        column: usize,
        message: String,
    },

    #[error("{path}: {message}")]
    Format { path: PathBuf, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
