use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by graph construction, exact searches and suite handling.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("capacity exceeded: order {order} is larger than {max}", max = crate::MAX_ORDER)]
    CapacityExceeded { order: usize },

    #[error("unsupported metric: {0}")]
    UnsupportedMetric(String),

    #[error("search budget exceeded: {needed} candidate checks needed, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
