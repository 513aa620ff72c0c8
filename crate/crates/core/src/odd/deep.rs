//! Shortest odd holes that come from a tripod.
//!
//! For a vertex set `Y` built from a vertex `x`, an edge `e` and up to two
//! spared vertices `d1, d2`, a base edge `b = b2b3`, an apex `a` and a choice
//! `{i, j} = {2, 3}`:
//!
//! ```text
//! Y  = (N(x) ∪ N(e)) \ (V(e) ∪ {d1,d2})
//! G1 = G - ((Y ∪ (N[b] \ (N(b2) ∩ N(b3)))) \ {a, bj})     P1 = P_G1(a,bj) - bj
//! Gi = G - ((Y ∪ N[P1 - a] ∪ N[bj]) \ {a, c1, c2, c3, bi})  Pi = c-trail(a,c1,c2,c3,bi)
//! Gj = G - (N[(P1 ∪ Pi) - a] \ {a, bj})                     Pj = P_Gj(a,bj)
//! ```
//!
//! and `G[Pi ∪ Pj]` is kept when it is an odd hole.
//!
//! Only tuples that can carry a tripod are visited: `x` lies in `N[V(e)]`,
//! `d1, d2` come from `(N(x) ∪ N(e)) \ V(e)` (others leave `Y` unchanged),
//! `b` is a triangle edge with `a ∉ N[b]`, the end of `P1` completes the
//! triangle on `b`, and `(c1, c2, c3)` sit at the distances of an
//! `‖P1‖`-marker of a path of length `L`, each step a shortest path of `Gi`
//! and interior to it (so they never fall in the deleted set). `L` is cut off
//! once `L + 1 + d(a, bj)` exceeds the best hole found.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::graph::{certify_hole, Graph, Hole, Vertex, VertexSet};
use crate::odd::types::{DetectorOutcome, MarkerTuple, Provenance};
use crate::oracle::properties::for_each_subset;
use crate::paths::{canonical_path, DistanceMatrix, INF};

pub fn find_deep_shortest(g: &Graph) -> DetectorOutcome {
    find_deep_bounded(g, usize::MAX)
}

/// As [`find_deep_shortest`], skipping candidates longer than `bound`.
pub fn find_deep_bounded(g: &Graph, bound: usize) -> DetectorOutcome {
    let bases = triangle_edges(g);
    if bases.is_empty() {
        return DetectorOutcome::none(Provenance::Deep);
    }
    let ys = y_sets(g);
    let dg = DistanceMatrix::new(g);
    let best = ys
        .par_iter()
        .filter_map(|y| {
            let mut s = Search { g, dg: &dg, best: None, bound };
            for &(b2, b3) in &bases {
                for (bj, bi) in [(b2, b3), (b3, b2)] {
                    s.for_base(y, (b2, b3), bi, bj);
                }
            }
            s.best
        })
        .min();
    DetectorOutcome { candidate: best, guarantee_tag: Provenance::Deep }
}

/// Edges `uv` with a common neighbour.
fn triangle_edges(g: &Graph) -> Vec<(Vertex, Vertex)> {
    g.edges().filter(|&(u, v)| !g.row(u).is_disjoint(g.row(v))).collect()
}

/// Distinct sets `Y`, sorted for determinism.
fn y_sets(g: &Graph) -> Vec<VertexSet> {
    let mut seen: HashSet<Vec<Vertex>> = HashSet::new();
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        let ve = g.set_of([u, v]);
        let ne = g.edge_neighborhood(u, v);
        let xs = g.closed_neighborhood_of(&ve);
        for x in xs.iter() {
            let mut y0 = g.row(x).union(&ne);
            y0.difference_with(&ve);
            let items = y0.to_vec();
            for_each_subset(&items, 2, |ds| {
                let mut y = y0.clone();
                for &d in ds {
                    y.remove(d);
                }
                if seen.insert(y.to_vec()) {
                    out.push(y);
                }
            });
        }
    }
    out.sort_by_key(|y| y.to_vec());
    out
}

struct Search<'g> {
    g: &'g Graph,
    dg: &'g DistanceMatrix,
    best: Option<Hole>,
    bound: usize,
}

impl Search<'_> {
    fn limit(&self) -> usize {
        self.best.as_ref().map_or(self.bound, |h| h.len().min(self.bound))
    }

    fn offer(&mut self, h: Hole) {
        if h.is_odd() && h.len() <= self.bound && self.best.as_ref().is_none_or(|b| h < *b) {
            self.best = Some(h);
        }
    }

    fn for_base(&mut self, y: &VertexSet, b: (Vertex, Vertex), bi: Vertex, bj: Vertex) {
        let g = self.g;
        let n = g.n();
        let nb = g.closed_neighborhood_of(&g.set_of([b.0, b.1]));
        let mut side = nb.clone();
        side.difference_with(&g.row(b.0).intersection(g.row(b.1)));
        let mut f1 = y.union(&side);
        for a in 0..n {
            if nb.contains(a) {
                continue;
            }
            let dabj = self.dg.raw(a, bj);
            if dabj == INF || dabj as usize + 3 > self.limit() {
                continue;
            }
            let (had_a, had_bj) = (f1.remove(a), f1.remove(bj));
            let path = canonical_path(g, &f1, a, bj);
            if had_a {
                f1.insert(a);
            }
            if had_bj {
                f1.insert(bj);
            }
            let Some(path) = path else { continue };
            if path.len() < 3 {
                continue;
            }
            let p1 = &path[..path.len() - 1];
            let b1 = *p1.last().unwrap();
            if !g.adjacent(b1, b.0) || !g.adjacent(b1, b.1) {
                continue;
            }
            self.with_p1(y, a, bi, bj, p1, dabj as usize);
        }
    }

    fn with_p1(&mut self, y: &VertexSet, a: Vertex, bi: Vertex, bj: Vertex, p1: &[Vertex], dabj: usize) {
        let g = self.g;
        let n = g.n();
        let ell = p1.len() - 1;
        let mut zi = y.union(&g.closed_neighborhood(bj));
        zi.union_with(&g.closed_neighborhood_of(&g.set_of(p1[1..].iter().copied())));
        zi.remove(a);
        zi.remove(bi);
        let di = DistanceMatrix::avoiding(g, &zi);
        let Some(lo) = di.dist(a, bi) else { return };
        let mut len = lo;
        while len < n && len + 1 + dabj <= self.limit() {
            let [_, p1s, mid, p3s, _] = MarkerTuple::positions(len, ell);
            let steps = [p1s, mid - p1s, p3s - mid, len - p3s];
            let di = &di;
            let at = |u: Vertex, d: usize| (0..n).filter(move |&w| di.raw(u, w) as usize == d);
            for c1 in at(a, steps[0]) {
                for c2 in at(c1, steps[1]) {
                    for c3 in at(c2, steps[2]).filter(|&c3| di.raw(c3, bi) as usize == steps[3]) {
                        self.try_marker(di, a, [c1, c2, c3], bi, bj, p1);
                    }
                }
            }
            len += 1;
        }
    }

    fn try_marker(&mut self, di: &DistanceMatrix, a: Vertex, c: [Vertex; 3], bi: Vertex, bj: Vertex, p1: &[Vertex]) {
        let g = self.g;
        let stops = [a, c[0], c[1], c[2], bi];
        let mut pi: Vec<Vertex> = vec![a];
        for w in stops.windows(2) {
            let seg = di.path(w[0], w[1]).expect("distances are finite");
            pi.extend_from_slice(&seg[1..]);
        }
        let on = g.set_of(pi.iter().copied());
        if on.len() != pi.len() {
            return;
        }
        let mut core = on.union(&g.set_of(p1.iter().copied()));
        core.remove(a);
        let mut fj = g.closed_neighborhood_of(&core);
        fj.remove(a);
        fj.remove(bj);
        let Some(pj) = canonical_path(g, &fj, a, bj) else { return };
        let total = pi.len() - 1 + pj.len() - 1 + 1;
        if total.is_multiple_of(2) || total > self.limit() {
            return;
        }
        let mut seq = pi;
        seq.extend(pj[1..].iter().rev());
        if let Ok(h) = certify_hole(g, &seq) {
            self.offer(h);
        }
    }
}
