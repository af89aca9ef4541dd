//! Configuration, reports, the built-in catalog and the generating-vector search.

pub mod catalog;
pub mod config;
pub mod report;
pub mod search;

use thiserror::Error;

use crate::albanese::AlbaneseError;
use crate::cover::CoverError;
use crate::groups::GroupError;
use crate::invariants::InvariantsError;
use crate::lattice::LatticeError;

pub use catalog::{catalog, family_names, CatalogEntry, CatalogOutcome};
pub use config::{load_config, parse_config, AnalysisConfig, LoadedGroup, RawConfig};
pub use report::{analyze, lattice_json, render_text, AnalyzeOptions};
pub use search::{search_free, SearchSummary};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SchemaError {
    #[error("{0}")]
    Json(String),
    #[error("{field} does not lie in G0")]
    NotInG0 { field: String },
    #[error(transparent)]
    Cover(#[from] CoverError),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CliError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema error: {0}")]
    Schema(#[from] SchemaError),
    #[error("{field}: letter {letter} out of range for {generators} generators")]
    WordOutOfRange {
        field: String,
        letter: i64,
        generators: usize,
    },
    #[error("invalid group: {0}")]
    Group(#[from] GroupError),
    #[error("unknown family {0:?}")]
    FamilyUnknown(String),
    #[error("search needs {needed} tuples, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("base genus must be at least 2, got {0}")]
    BaseGenusTooSmall(usize),
    #[error("|G0| = {order} is too large for the quotient lattice (limit {limit})")]
    LatticeTooLarge { order: usize, limit: usize },
    #[error("theorem check failed: {0}")]
    TheoremViolation(String),
    #[error("catalog deviation in {0}")]
    CatalogDeviation(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::TheoremViolation(_) | CliError::CatalogDeviation(_) => 3,
            _ => 2,
        }
    }

    pub(crate) fn from_json(e: serde_json::Error) -> Self {
        match e.classify() {
            serde_json::error::Category::Data => CliError::Schema(SchemaError::Json(e.to_string())),
            _ => CliError::Parse {
                line: e.line(),
                column: e.column(),
                message: e.to_string(),
            },
        }
    }
}

impl From<LatticeError> for CliError {
    fn from(e: LatticeError) -> Self {
        match e {
            LatticeError::GroupTooLarge { order, limit } => {
                CliError::LatticeTooLarge { order, limit }
            }
            LatticeError::Group(g) => CliError::Group(g),
            other => CliError::TheoremViolation(format!("lattice: {other}")),
        }
    }
}

impl From<AlbaneseError> for CliError {
    fn from(e: AlbaneseError) -> Self {
        CliError::TheoremViolation(format!("albanese: {e}"))
    }
}

impl From<InvariantsError> for CliError {
    fn from(e: InvariantsError) -> Self {
        CliError::TheoremViolation(format!("invariants: {e}"))
    }
}
