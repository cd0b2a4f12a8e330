use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("vertex id {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("{n} vertices exceeds the supported maximum of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("vertex set is empty")]
    EmptySet,
    #[error("vertex sets overlap")]
    Overlap,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("node {0} is not in the tree")]
    BadNode(usize),
    #[error("invalid rooted tree: {0}")]
    InvalidTree(String),
    #[error("exact decomposition supports at most {max} vertices, got {n}")]
    TooLargeForExact { n: usize, max: usize },
    #[error("malformed .td input at line {line}: {reason}")]
    MalformedTd { line: usize, reason: String },
    #[error("vertex {0} is contained in no bag")]
    UncoveredVertex(usize),
    #[error("improper decomposition: {0}")]
    ImproperDecomposition(String),
    #[error("coloring has {got} entries for a graph on {expected} vertices")]
    PartialColoring { expected: usize, got: usize },
    #[error("search exhausted its budget of {0} nodes")]
    SearchExhausted(u64),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
