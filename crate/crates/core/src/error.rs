use thiserror::Error;

use crate::decomposition::{GreedyViolation, PartitionViolation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0},{1}}}")]
    DuplicateEdge(usize, usize),
    #[error("edge {{{0},{1}}} is not present in the graph")]
    MissingEdge(usize, usize),
    #[error("edge bitmask {mask:#x} has bits beyond the {n}-vertex pair range")]
    MaskOutOfRange { mask: u64, n: usize },
    #[error("clique must contain at least one vertex")]
    EmptyClique,
    #[error("clique lists vertex {0} more than once")]
    RepeatedVertex(usize),
    #[error("{what} supports at most {max} vertices, got {n}")]
    TooLarge {
        what: &'static str,
        n: usize,
        max: usize,
    },
    #[error("{what} needs at least {min} vertices, got {n}")]
    TooSmall {
        what: &'static str,
        n: usize,
        min: usize,
    },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("graph6: {reason} at byte offset {offset}")]
    Graph6 { offset: usize, reason: String },
    #[error("edge list line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error("artifact: {0}")]
    Artifact(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid clique partition: {} violation(s), first: {:?}", .0.len(), .0.first())]
    InvalidPartition(Vec<PartitionViolation>),
    #[error("invalid greedy decomposition: {} violation(s), first: {:?}", .0.len(), .0.first())]
    InvalidGreedy(Vec<GreedyViolation>),
    #[error("representation violates intersection invariant at pair ({u},{v}): |S_u ∩ S_v| = {found}, expected {expected}")]
    IntersectionMismatch {
        u: usize,
        v: usize,
        found: usize,
        expected: usize,
    },
    #[error("artifact is for {found} vertices but graph has {expected}")]
    VertexCountMismatch { expected: usize, found: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
