use thiserror::Error;

use crate::graph::Vertex;

/// Errors shared by every operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty graph")]
    EmptyGraph,
    #[error("graph not connected")]
    NotConnected,
    #[error("graph not 2-connected")]
    NotTwoConnected,
    #[error("vertex {0} not in graph")]
    MissingVertex(Vertex),
    #[error("edge {{{0}, {1}}} not in graph")]
    MissingEdge(Vertex, Vertex),
    #[error("instance too large for exact oracle: n={n} exceeds threshold {threshold}")]
    InstanceTooLarge { n: usize, threshold: usize },
    #[error("disconnected pair: no ({0}, {1})-path")]
    DisconnectedPair(Vertex, Vertex),
    #[error("oracle reported an acyclic graph, but the instance has a cycle")]
    UnexpectedAcyclic,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

pub(crate) fn internal(msg: impl Into<String>) -> Error {
    Error::Internal(msg.into())
}
