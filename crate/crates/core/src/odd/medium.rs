//! Shortest odd holes whose major vertices sit around a single hole edge.
//!
//! For each edge `e` the restricted table gives `p_e`, `φ_e` and `P_e`; a
//! tuple `(b, c, d)` is accepted when
//!
//! ```text
//! p_e(c,d) = 3,  p_e(c, φ_e(d,b)) > 3,  p_e(d, φ_e(c,b)) > 3,
//! p_e(c,b) = p_e(d,b) = p_e(c, φ_e(b,d)) - 1 = p_e(d, φ_e(b,c)) - 1,
//! ```
//!
//! and the three paths `P_e(b,c) ∪ P_e(c,d) ∪ P_e(d,b)` close up into the
//! candidate. Any such union is an odd hole; a failure to certify one is a bug.

use rayon::prelude::*;

use crate::graph::{certify_hole, Graph, Vertex};
use crate::odd::types::{DetectorOutcome, Provenance};
use crate::odd::{join_cycle, DetectorError};
use crate::paths::{build_restricted_table, RestrictedDistanceTable, INF};

/// Accepted tuple, ordered by `(sum, e, b, c, d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Tuple {
    sum: usize,
    e: (Vertex, Vertex),
    b: Vertex,
    c: Vertex,
    d: Vertex,
}

/// Panics if an accepted tuple fails to certify; see [`try_find_medium`].
pub fn find_medium(g: &Graph) -> DetectorOutcome {
    match try_find_medium(g) {
        Ok(o) => o,
        Err(e) => panic!("{e}"),
    }
}

pub fn try_find_medium(g: &Graph) -> Result<DetectorOutcome, DetectorError> {
    let edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    let best = edges
        .par_iter()
        .filter_map(|&e| {
            let t = build_restricted_table(g, e).expect("edge from the graph");
            scan_edge(&t).map(|(sum, b, c, d)| (Tuple { sum, e, b, c, d }, t))
        })
        .min_by(|a, b| a.0.cmp(&b.0));
    let Some((tuple, table)) = best else {
        return Ok(DetectorOutcome::none(Provenance::Medium));
    };
    let (b, c, d) = (tuple.b, tuple.c, tuple.d);
    let bc = table.path(b, c).expect("finite p_e(b,c)");
    let cd = table.path(c, d).expect("finite p_e(c,d)");
    let db = table.path(d, b).expect("finite p_e(d,b)");
    let seq = join_cycle(&[&bc, &cd, &db]);
    let hole = certify_hole(g, &seq).map_err(|source| DetectorError::MediumUnion { e: tuple.e, b, c, d, source })?;
    if !hole.is_odd() {
        return Err(DetectorError::EvenCandidate(hole.len()));
    }
    Ok(DetectorOutcome { candidate: Some(hole), guarantee_tag: Provenance::Medium })
}

/// Minimum `(p(b,c)+p(b,d)+p(c,d), b, c, d)` over tuples satisfying the
/// distance conditions for this table's edge.
fn scan_edge(t: &RestrictedDistanceTable) -> Option<(usize, Vertex, Vertex, Vertex)> {
    let n = t.n();
    let mut best: Option<(usize, Vertex, Vertex, Vertex)> = None;
    let gt3 = |u: Vertex, w: Option<Vertex>| {
        w.is_some_and(|w| {
            let p = t.raw_p(u, w);
            p != INF && p > 3
        })
    };
    for c in 0..n {
        for d in c + 1..n {
            if t.raw_p(c, d) != 3 {
                continue;
            }
            for b in 0..n {
                let pt = t.raw_p(c, b);
                if pt == INF || pt != t.raw_p(d, b) || b == c || b == d {
                    continue;
                }
                let sum = 2 * pt as usize + 3;
                if best.is_some_and(|(s, ..)| s < sum) {
                    continue;
                }
                if !gt3(c, t.phi(d, b)) || !gt3(d, t.phi(c, b)) {
                    continue;
                }
                let want = pt + 1;
                let ok = |u: Vertex, w: Option<Vertex>| w.is_some_and(|w| t.raw_p(u, w) == want);
                if !ok(c, t.phi(b, d)) || !ok(d, t.phi(b, c)) {
                    continue;
                }
                let cand = (sum, b, c, d);
                if best.is_none_or(|cur| cand < cur) {
                    best = Some(cand);
                }
            }
        }
    }
    best
}
