//! Construction, verification, structural analysis and exhaustive search for
//! combinatorial drawings of bipartite 1-planar graphs (graphs drawable in
//! the plane with every edge crossed at most once).
//!
//! Drawings are purely combinatorial: a graph, a set of crossing edge pairs,
//! and a rotation system of the planarization. Face tracing plus Euler's
//! formula certifies that a rotation system is a sphere embedding, so no
//! coordinates ever carry correctness weight.

pub mod drawing;
pub mod embed;
pub mod export;
pub mod extremal;
pub mod graph;
pub mod search;
pub mod structure;

pub use drawing::{Drawing, DrawingError, EdgeClass, EdgeClassification, VerificationReport};
pub use embed::{Dart, Embedding, Node};
pub use graph::{
    beta, bound_check, BoundKind, BoundVerdict, Color, ColoredGraph, EdgeId, GraphError, Vertex,
};
