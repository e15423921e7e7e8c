//! Matching-theory toolkit for small loopless multigraphs.
//!
//! The crate provides a multigraph carrier with stable identifiers, exact
//! perfect-matching enumeration, brick/brace/extremality predicates, the
//! splicing and triangle-insertion operators, and generators for a family of
//! extremal bricks whose perfect-matching count is `ceil(5n/8)`.

pub mod analysis;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod matching;
pub mod verifier;

pub use error::{Error, Result};
pub use graph::{EdgeCut, EdgeId, MultiGraph, VertexId, VertexMap};
pub use matching::{MatchingCensus, PerfectMatching};
