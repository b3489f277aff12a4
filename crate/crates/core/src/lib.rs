//! Graph coloring on hereditary classes defined by two forbidden induced subgraphs.
//!
//! The crate provides bitset graphs, induced-subgraph search, canonical forms
//! for small graphs, exact chromatic-number solvers for several classes, the
//! diamond-implant reduction, and a classifier for pairs of forbidden graphs.

pub mod atlas;
pub mod bitset;
pub mod canon;
pub mod chromatic;
pub mod classifier;
pub mod edgelist;
pub mod embedding;
pub mod error;
pub mod gadgets;
pub mod graph;
pub mod named;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::Graph;
