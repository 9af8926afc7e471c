//! Crate-wide error type.

use std::path::PathBuf;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("config error: {0}")]
    Config(String),

    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("row {row}, column {column}: non-positive price {value}")]
    NonPositivePrice {
        row: usize,
        column: String,
        value: f64,
    },

    #[error("row {row}: period {period} does not increase over the previous row")]
    NonMonotonePeriods { row: usize, period: String },

    #[error("row {row}: expected {expected} price fields, found {found}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("row {row}, column {column}: missing or unparseable value")]
    BadCell { row: usize, column: String },

    #[error("duplicate asset identifier {0}")]
    DuplicateAsset(String),

    #[error("invalid panel: {0}")]
    InvalidPanel(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("conditional variance recursion diverged at t = {t}")]
    FilterDiverged { t: usize },

    #[error("degenerate input series: {0}")]
    DegenerateSeries(String),

    #[error(
        "optimizer did not converge after {iterations} iterations (gradient norm {grad_norm:.3e})"
    )]
    NonConvergence {
        iterations: usize,
        grad_norm: f64,
    },

    #[error("correlation entry ({i},{j}) = {value} outside [-1, 1]")]
    CorrelationOutOfRange { i: usize, j: usize, value: f64 },

    #[error("correlation cube assembly missing {} pair(s): {}", .0.len(), format_pairs(.0))]
    MissingPairs(Vec<(String, String)>),

    #[error("empty input: {0}")]
    EmptyInput(String),

    #[error("estimation failures present: {0}")]
    EstimationFailures(String),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

fn format_pairs(pairs: &[(String, String)]) -> String {
    let shown: Vec<String> = pairs
        .iter()
        .take(8)
        .map(|(a, b)| format!("({a},{b})"))
        .collect();
    let mut s = shown.join(", ");
    if pairs.len() > 8 {
        s.push_str(", ...");
    }
    s
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit code classification used by the command-line interface.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::InvalidParameter(_) => 1,
            Error::NonConvergence { .. }
            | Error::FilterDiverged { .. }
            | Error::EstimationFailures(_) => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
