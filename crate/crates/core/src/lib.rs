//! Structure theory of partial cubes: graphs isometrically embeddable into
//! hypercubes.
//!
//! - [`graph`]: simple graphs with their shortest-path metric, isometric and
//!   convex vertex sets.
//! - [`metric`]: semicubes, the Djoković and Winkler relations, θ-classes and
//!   the fundamental sets of an edge.
//! - [`recognition`]: partial-cube recognition, hypercube embeddings and the
//!   rectangle criterion.
//! - [`family`]: set families, their induced graphs, well-gradedness and
//!   retraction.
//! - [`dimensions`]: isometric and lattice dimension, semicube graphs and
//!   lattice embeddings.
//! - [`constructions`]: products, pasting, expansion and contraction.

pub mod constructions;
pub mod dimensions;
mod error;
pub mod family;
pub mod graph;
pub mod matching;
pub mod metric;
pub mod recognition;

pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Edge, Graph, Vertex, VertexSet};
