//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("loop edge at vertex {0} not allowed")]
    LoopEdge(usize),

    #[error("{operation} requires a connected graph")]
    Disconnected { operation: &'static str },

    #[error("graph has an isolated vertex ({0}); no edge cover exists")]
    IsolatedVertex(usize),

    #[error("input is not a tree")]
    NotATree,

    #[error("operation is not defined for paths")]
    PathInput,

    #[error("input is not a block graph")]
    NotBlockGraph,

    #[error("second corona factor is complete; only bounds are available")]
    CompleteFactor,

    #[error("instance has {pairs} pairs, above the limit of {limit}")]
    TooManyPairs { pairs: usize, limit: usize },

    #[error("search budget exceeded after {explored} branch nodes")]
    BudgetExceeded { explored: u64 },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
