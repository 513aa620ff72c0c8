//! Odd holes: short-hole preprocessing, the four detectors and the
//! shortest-odd-hole / perfection pipelines.

use thiserror::Error;

use crate::graph::{HoleError, Vertex};

pub mod deep;
pub mod general;
pub mod medium;
pub mod pipeline;
pub mod shallow;
pub mod types;

pub use deep::find_deep_shortest;
pub use general::find_general;
pub use medium::{find_medium, try_find_medium};
pub use pipeline::{
    contains_odd_hole, is_perfect, list_short_odd_holes, shortest_odd_hole, shortest_odd_hole_report, PerfectReport,
    PipelineReport,
};
pub use shallow::find_shallow;
pub use types::{DetectorOutcome, MarkerTuple, Provenance, Spade, Tripod};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DetectorError {
    #[error("accepted tuple e={e:?} b={b} c={c} d={d} does not close into a hole: {source}")]
    MediumUnion { e: (Vertex, Vertex), b: Vertex, c: Vertex, d: Vertex, source: HoleError },
    #[error("detector produced an even cycle of length {0}")]
    EvenCandidate(usize),
}

/// Concatenates paths that meet end to start, the last returning to the
/// first vertex, into one cyclic sequence.
pub(crate) fn join_cycle(parts: &[&[Vertex]]) -> Vec<Vertex> {
    let mut seq: Vec<Vertex> = Vec::new();
    for p in parts {
        if seq.is_empty() {
            seq.extend_from_slice(p);
        } else {
            seq.extend_from_slice(&p[1..]);
        }
    }
    if seq.len() > 1 && seq.first() == seq.last() {
        seq.pop();
    }
    seq
}
