use thiserror::Error;

use crate::graph::{Edge, Vertex};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),

    #[error("edges {0} and {1} share a vertex")]
    NotAMatching(Edge, Edge),

    #[error("path is not augmenting: {0}")]
    NotAugmenting(String),

    #[error("cannot arrange component as a simple path: {0}")]
    NotArrangeable(String),

    #[error("vertex {0} has no neighbour on the cycle")]
    NoCycleNeighbour(Vertex),

    #[error("parent relation has a cycle through vertex {0}")]
    ParentCycle(Vertex),

    #[error("instance exceeds oracle bound: {0}")]
    OracleBound(String),

    #[error("set of even cardinality {0} is not an odd set")]
    EvenSet(usize),

    #[error("inconsistent search state: {0}")]
    InconsistentState(String),

    #[error("contraction depth {depth} exceeds vertex count {vertices}")]
    DepthExceeded { depth: usize, vertices: usize },
}
