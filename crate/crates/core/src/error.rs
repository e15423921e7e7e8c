use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("loop at vertex {0} rejected: graphs are loopless")]
    Loop(VertexId),

    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),

    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),

    #[error("no vertex labelled {0:?}")]
    UnknownLabel(String),

    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),

    #[error("duplicate {kind} id {id}")]
    DuplicateId { kind: &'static str, id: u32 },

    #[error("invalid cut side: {0}")]
    InvalidCut(&'static str),

    #[error("{what} limited to {limit} vertices, got {actual}")]
    Scale {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("vertex {vertex} has degree {degree}, expected {expected}")]
    WrongDegree {
        vertex: VertexId,
        degree: usize,
        expected: usize,
    },

    #[error("edge map is not a bijection between the two stars: {0}")]
    InvalidBijection(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("verification failed: {0}")]
    Verification(String),
}
