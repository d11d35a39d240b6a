use std::path::PathBuf;

/// Error type shared by every module in the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("alphabets have different lengths: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("invalid PMF: {0}")]
    InvalidPmf(String),

    #[error("invalid measure: {0}")]
    InvalidMeasure(String),

    #[error("letter index {index} out of range for alphabet of length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("invalid transform case: {0}")]
    InvalidCase(String),

    #[error("cost must be positive, got {0}")]
    InvalidCost(f64),

    #[error("invalid path rules: {0}")]
    InvalidRules(String),

    #[error("invalid criteria table: {0}")]
    InvalidTable(String),

    #[error("{path}: row {row}, column `{column}`: {reason}")]
    MalformedRow {
        path: String,
        row: usize,
        column: String,
        reason: String,
    },

    #[error("{path}: {reason}")]
    BadFile { path: String, reason: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("failed to read {path}: {source}")]
    ReadFailed {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("failed to write {path}: {source}")]
    WriteFailed {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    /// Process exit status for this error: 2 for I/O failures, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io(_) | Error::ReadFailed { .. } | Error::WriteFailed { .. } => 2,
            Error::Csv(e) if e.is_io_error() => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Opens a file for reading, attaching the path to any failure.
pub fn open_file(path: &std::path::Path) -> Result<std::fs::File> {
    std::fs::File::open(path).map_err(|source| Error::ReadFailed {
        path: path.to_path_buf(),
        source,
    })
}
