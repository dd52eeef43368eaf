//! Error type shared by every module in the crate.

use std::path::PathBuf;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("i/o error on {path}: {source}")]
    File {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("schema error: {0}")]
    Schema(String),
    #[error("point ({lat}, {lon}) lies outside the grid extent")]
    OutOfExtent { lat: f64, lon: f64 },
    #[error("trace carries no user identifiers; mobility split unavailable")]
    UsersAbsent,
    #[error("operator {operator} lacks a {tier} band")]
    MissingTier { operator: String, tier: String },
    #[error("cell {0} has a degenerate hull")]
    DegenerateCell(String),
    #[error("need at least two sites of class {0}")]
    TooFewSites(String),
    #[error("empty trace: {0}")]
    EmptyTrace(String),
    #[error("no demand chain trained for area type {0}")]
    ModelAreaMissing(String),
    #[error("index mismatch: {0}")]
    IndexMismatch(String),
    #[error("grid mismatch: {0}")]
    GridMismatch(String),
    #[error("k-fold protocol requires k >= 2, got {0}")]
    InvalidK(usize),
    #[error("non-positive input: {0}")]
    NonPositiveInput(String),
    #[error("throughput table: {0}")]
    TableMissing(String),
    #[error("location is not struggling")]
    NotStruggling,
    #[error("strategy order violation: {0}")]
    StrategyOrderViolation(String),
    #[error("invalid value: {0}")]
    Invalid(String),
}

impl Error {
    pub fn file(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::File {
            path: path.into(),
            source,
        }
    }

    /// Stable machine-readable tag, used by the CLI error JSON.
    pub fn code(&self) -> &'static str {
        match self {
            Error::File { .. } => "file",
            Error::Schema(_) => "schema",
            Error::OutOfExtent { .. } => "out_of_extent",
            Error::UsersAbsent => "users_absent",
            Error::MissingTier { .. } => "missing_tier",
            Error::DegenerateCell(_) => "degenerate_cell",
            Error::TooFewSites(_) => "too_few_sites",
            Error::EmptyTrace(_) => "empty_trace",
            Error::ModelAreaMissing(_) => "model_area_missing",
            Error::IndexMismatch(_) => "index_mismatch",
            Error::GridMismatch(_) => "grid_mismatch",
            Error::InvalidK(_) => "invalid_k",
            Error::NonPositiveInput(_) => "non_positive_input",
            Error::TableMissing(_) => "table_missing",
            Error::NotStruggling => "not_struggling",
            Error::StrategyOrderViolation(_) => "strategy_order",
            Error::Invalid(_) => "invalid",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
