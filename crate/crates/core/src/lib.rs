//! Odd-hole detection, shortest odd holes, perfect-graph recognition and the
//! phase-1 shortest-even-hole machinery, with brute-force oracles for
//! differential testing.

pub mod even;
pub mod gen;
pub mod graph;
pub mod io;
pub mod odd;
pub mod oracle;
pub mod paths;

pub use graph::{anticomplete, certify_hole, Graph, GraphError, Hole, HoleError, PathSeq, Side, Vertex, VertexSet};
