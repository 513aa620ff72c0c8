//! Shortest odd hole, odd-hole detection and perfection.
//!
//! Odd holes shorter than 15 are listed outright. Past that the four
//! detectors run in turn, each bounded by the best hole so far; whichever
//! produces the overall minimum (length, then canonical order) is reported.

use std::time::{Duration, Instant};

use crate::graph::{Graph, Hole, Side};
use crate::odd::deep::find_deep_bounded;
use crate::odd::general::find_general_bounded;
use crate::odd::medium::find_medium;
use crate::odd::shallow::find_shallow_bounded;
use crate::odd::types::{DetectorOutcome, Provenance};
use crate::oracle::holes::{enumerate_holes, HoleInventory};

/// Odd holes below this length are listed exhaustively.
pub const SHORT_ODD_BOUND: usize = 15;

/// Every odd hole of length `< bound`.
pub fn list_short_odd_holes(g: &Graph, bound: usize) -> HoleInventory {
    if bound < 6 {
        return HoleInventory { holes: Vec::new(), max_len: Some(bound.saturating_sub(2)) };
    }
    enumerate_holes(g, Some(bound - 2)).filtered(Hole::is_odd)
}

#[derive(Debug, Clone, Default)]
pub struct PipelineReport {
    pub hole: Option<Hole>,
    pub provenance: Option<Provenance>,
    /// Wall-clock per stage, in run order, summed over components.
    pub timings: Vec<(Provenance, Duration)>,
}

impl PipelineReport {
    fn add_time(&mut self, stage: Provenance, d: Duration) {
        match self.timings.iter_mut().find(|(s, _)| *s == stage) {
            Some((_, t)) => *t += d,
            None => self.timings.push((stage, d)),
        }
    }

    fn offer(&mut self, h: Hole, p: Provenance) {
        if self.hole.as_ref().is_none_or(|b| h < *b) {
            self.hole = Some(h);
            self.provenance = Some(p);
        }
    }
}

/// A shortest odd hole of `g`, or `None` if `g` has no odd hole.
pub fn shortest_odd_hole(g: &Graph) -> Option<Hole> {
    shortest_odd_hole_report(g).hole
}

pub fn shortest_odd_hole_report(g: &Graph) -> PipelineReport {
    run(g, false)
}

/// Whether `g` has an odd hole, stopping at the first stage that finds one.
/// The reported hole is an odd hole but not necessarily a shortest one.
pub fn contains_odd_hole(g: &Graph) -> PipelineReport {
    run(g, true)
}

fn run(g: &Graph, stop_early: bool) -> PipelineReport {
    let mut report = PipelineReport::default();
    for comp in g.components() {
        if comp.len() < 5 {
            continue;
        }
        let (h, relabel) = g.induced(&comp);
        let bound = report.hole.as_ref().map_or(usize::MAX, Hole::len);
        let part = run_connected(&h, stop_early, bound);
        for (s, d) in part.timings {
            report.add_time(s, d);
        }
        if let (Some(hole), Some(p)) = (part.hole, part.provenance) {
            report.offer(hole.lift(&relabel, g), p);
            if stop_early {
                break;
            }
        }
    }
    report
}

fn run_connected(g: &Graph, stop_early: bool, outer: usize) -> PipelineReport {
    let mut report = PipelineReport::default();
    let t = Instant::now();
    let short = list_short_odd_holes(g, SHORT_ODD_BOUND);
    report.add_time(Provenance::Preprocessing, t.elapsed());
    if let Some(h) = short.shortest_odd() {
        report.offer(h.clone(), Provenance::Preprocessing);
        return report;
    }
    let stages: [(Provenance, fn(&Graph, usize) -> DetectorOutcome); 4] = [
        (Provenance::Shallow, find_shallow_bounded),
        (Provenance::Medium, |g, _| find_medium(g)),
        (Provenance::General, find_general_bounded),
        (Provenance::Deep, find_deep_bounded),
    ];
    for (stage, detect) in stages {
        let bound = report.hole.as_ref().map_or(outer, Hole::len).min(outer);
        let t = Instant::now();
        let out = detect(g, bound);
        report.add_time(stage, t.elapsed());
        if let Some(h) = out.candidate {
            debug_assert!(h.is_odd());
            if h.len() <= outer {
                report.offer(h, stage);
            }
        }
        if stop_early && report.hole.is_some() {
            break;
        }
    }
    report
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerfectReport {
    pub perfect: bool,
    /// A shortest odd hole of the graph, or else of its complement.
    pub witness: Option<(Side, Hole)>,
    pub provenance: Option<Provenance>,
}

/// Perfection via odd holes in `g` and its complement. The witness hole of
/// the complement side is a hole of `g.complement()`.
pub fn is_perfect(g: &Graph) -> PerfectReport {
    if g.n() < 5 {
        return PerfectReport { perfect: true, witness: None, provenance: None };
    }
    for (side, h) in [(Side::Graph, g.clone()), (Side::Complement, g.complement())] {
        let r = shortest_odd_hole_report(&h);
        if let Some(hole) = r.hole {
            return PerfectReport { perfect: false, witness: Some((side, hole)), provenance: r.provenance };
        }
    }
    PerfectReport { perfect: true, witness: None, provenance: None }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    #[test]
    fn short_listing() {
        let g = gen::with_pendant_paths(&gen::cycle(5), &[(0, 1)]);
        assert_eq!(list_short_odd_holes(&g, 15).len(), 1);
        assert!(list_short_odd_holes(&gen::complete_bipartite(3, 3), 15).is_empty());
        assert!(list_short_odd_holes(&gen::cycle(15), 15).is_empty());
    }

    #[test]
    fn bridged_c5_c9() {
        let g = gen::bridged(&gen::cycle(5), &gen::cycle(9), 2);
        let r = shortest_odd_hole_report(&g);
        assert_eq!(r.hole.unwrap().len(), 5);
        assert_eq!(r.provenance, Some(Provenance::Preprocessing));
    }

    #[test]
    fn c17() {
        let r = shortest_odd_hole_report(&gen::cycle(17));
        assert_eq!(r.hole.unwrap().len(), 17);
    }

    #[test]
    fn perfection() {
        assert!(!is_perfect(&gen::cycle(5)).perfect);
        let co = gen::cycle(7).complement();
        let r = is_perfect(&co);
        assert_eq!(r.witness.unwrap().0, Side::Complement);
        assert!(is_perfect(&gen::complete(5)).perfect);
    }

    #[test]
    fn disconnected() {
        let g = gen::attach(&gen::cycle(7), &[]);
        let two = crate::Graph::from_edge_list(
            14,
            &g.edges().chain(gen::cycle(7).edges().map(|(u, v)| (u + 7, v + 7))).collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!(shortest_odd_hole(&two).unwrap().len(), 7);
    }
}
