//! Deciding crossing number at most one, with certificates.
//!
//! A nonplanar graph has crossing number one exactly when it has a crossing
//! pair: two edges that cross in some drawing with a single crossing. This
//! crate tests candidate pairs three independent ways (a planarization
//! gadget, a universal condition over all Kuratowski subgraphs, and an
//! existential one over a single Kuratowski subgraph plus two planarity
//! checks), builds explicit drawings, and never answers without a
//! certificate that can be re-checked.

pub mod bridges;
pub mod budget;
pub mod characterize;
pub mod corpus;
pub mod generators;
pub mod graph;
pub mod kuratowski;
pub mod parallel;
pub mod planarity;
pub mod separation;

pub use graph::{EdgeId, EdgePair, GraphError, Multigraph, Path, Subgraph, VertexId};
