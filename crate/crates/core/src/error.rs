use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("input contains no hyperedges")]
    EmptyInput,
    #[error("line {line}: {reason}")]
    MalformedLine { line: usize, reason: String },
    #[error("hyperedge {index} is empty")]
    EmptyHyperedge { index: usize },
    #[error("hyperedge {edge} references node {node} but only {node_count} nodes exist")]
    NodeOutOfRange {
        edge: usize,
        node: usize,
        node_count: usize,
    },
    #[error("duplicate node label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown node label {0:?}")]
    UnknownLabel(String),
    #[error("invalid counts: {0}")]
    InvalidCounts(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error(
        "partition is not balanced: nodes {first} and {second} have different input signatures"
    )]
    UnbalancedPartition { first: usize, second: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("hyperedges of order {0} are not supported by the dynamics (only 2 and 3)")]
    UnsupportedOrder(usize),
    #[error("state became non-finite at step {step}")]
    NonFiniteState { step: usize },
    #[error("hypergraph is not connected")]
    Disconnected,
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
