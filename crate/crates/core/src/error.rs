use thiserror::Error;

use crate::graph::Vertex;

/// Errors raised by graph construction, parsing, and graph predicates.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: Vertex },
    #[error("vertex {vertex} out of range for a graph with {count} vertices")]
    VertexOutOfRange { vertex: Vertex, count: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("vertices {a}, {b}, {c} are not in one connected component")]
    Disconnected { a: Vertex, b: Vertex, c: Vertex },
    #[error("graph is not connected")]
    NotConnected,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// Precondition failures of the reconfiguration builders, checkers, and the
/// reconstruction pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReconfError {
    #[error("invalid size parameter k = {k}: {reason}")]
    InvalidK { k: usize, reason: String },
    #[error("vertex set {members:?} is not a clique of the base graph")]
    NotAClique { members: Vec<Vertex> },
    #[error("expected a {expected} reconfiguration graph, got {found}")]
    RuleMismatch { expected: String, found: String },
    #[error("input graph is not planar")]
    NotPlanar,
    #[error("{0}")]
    InvalidInput(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
