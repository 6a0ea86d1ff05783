use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vertex {0} out of range")]
    VertexOutOfRange(Vertex),
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(Vertex, Vertex),
    #[error("edge {0}-{1} is not in the graph")]
    UnknownEdge(Vertex, Vertex),
    #[error("orientation covers {covered} of {expected} edges")]
    Coverage { covered: usize, expected: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RealizeError {
    #[error("sequence needs at least two entries")]
    TooShort,
    #[error("in-degree sum {sum} does not match {edges} edges")]
    SumMismatch { sum: usize, edges: usize },
    #[error("sequence contradicts itself at position {0}")]
    Contradiction(usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EmbedError {
    #[error("block is not outerplanar")]
    NotOuterplanar,
    #[error("block must be 2-connected with at least 3 vertices")]
    NotBlock,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrientError {
    #[error("graph is not in the required class: {0}")]
    ClassMismatch(String),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error(transparent)]
    Embed(#[from] EmbedError),
    #[error(transparent)]
    Realize(#[from] RealizeError),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {edges} edges, budget is {budget}")]
    BudgetExceeded { edges: usize, budget: usize },
}
