//! Shortest even hole at desk scale: short holes are listed, then the
//! phase-1 scan and a pluggable flat-hole finder are both consulted.

use crate::even::clearing::list_short_even_holes;
use crate::even::phase1::{construct_even_hole, phase1_scan_with, Phase1Record};
use crate::graph::{Graph, Hole};
use crate::oracle::holes::oracle_shortest_even_hole;
use crate::paths::DistanceMatrix;

/// Even holes below this length are listed exhaustively.
pub const SHORT_EVEN_BOUND: usize = 24;

/// A finder that returns a shortest even hole whenever `g` has a flat
/// shortest even hole (and anything or nothing otherwise).
pub trait Phase2: Sync {
    fn find(&self, g: &Graph) -> Option<Hole>;
}

/// Exhaustive search; unconditionally correct.
#[derive(Debug, Clone, Copy, Default)]
pub struct OraclePhase2;

impl Phase2 for OraclePhase2 {
    fn find(&self, g: &Graph) -> Option<Hole> {
        oracle_shortest_even_hole(g)
    }
}

/// Never finds anything; isolates phase 1.
#[derive(Debug, Clone, Copy, Default)]
pub struct NoPhase2;

impl Phase2 for NoPhase2 {
    fn find(&self, _: &Graph) -> Option<Hole> {
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvenSource {
    Preprocessing,
    Phase1,
    Phase2,
}

impl EvenSource {
    pub fn as_str(self) -> &'static str {
        match self {
            EvenSource::Preprocessing => "preprocessing",
            EvenSource::Phase1 => "phase1",
            EvenSource::Phase2 => "phase2",
        }
    }
}

#[derive(Debug, Clone)]
pub struct EvenDeskReport {
    pub hole: Option<Hole>,
    pub source: Option<EvenSource>,
    pub phase1: Option<Phase1Record>,
}

pub fn shortest_even_hole_desk(g: &Graph, phase2: &dyn Phase2) -> Option<Hole> {
    shortest_even_hole_desk_report(g, phase2).hole
}

pub fn shortest_even_hole_desk_report(g: &Graph, phase2: &dyn Phase2) -> EvenDeskReport {
    let short = list_short_even_holes(g, SHORT_EVEN_BOUND);
    if let Some(h) = short.shortest_even() {
        return EvenDeskReport { hole: Some(h.clone()), source: Some(EvenSource::Preprocessing), phase1: None };
    }
    let dist = DistanceMatrix::new(g);
    let rec = phase1_scan_with(g, &dist);
    let p1 = rec
        .as_ref()
        .map(|r| construct_even_hole(g, &dist, &r.witness, r.a, r.b).expect("a firing tuple always yields its hole"));
    let p2 = phase2.find(g);
    let (hole, source) = match (p1, p2) {
        (Some(a), Some(b)) if b < a => (Some(b), Some(EvenSource::Phase2)),
        (Some(a), _) => (Some(a), Some(EvenSource::Phase1)),
        (None, Some(b)) => (Some(b), Some(EvenSource::Phase2)),
        (None, None) => (None, None),
    };
    EvenDeskReport { hole, source, phase1: rec }
}
