//! Shortest odd holes that are neither shallow, medium nor deep.
//!
//! Each tuple `(x0, xj, x3, x4, x5)` with `x4x5 ∈ E` and `k ∈ {3,4,5}` names
//! an `xj xk`-path `P` of `H = G - (N[{x0,x4,x5}] \ {...})` and a graph in
//! which two more shortest paths close `P` into a candidate hole:
//!
//! * `j = 1`: `G0 = G - ((N(x1) ∩ N(xk)) ∪ (N[I] \ {x1,xk}))`, candidates
//!   `C1(v) = P ∪ P1(v) ∪ Pk(v)` accepted on odd parity and
//!   `N_{G0}[P1(v) - v] ∩ V(Pk(v)) = {v}`;
//! * `j = 2`: `G0(v) = G1 - (X1 \ {v})` built from the ball `I1` around `x2`,
//!   candidates `C2(v) = P ∪ P2(v) ∪ Pk(v)`.
//!
//! Every candidate is certified before it is kept.
//!
//! The search only visits tuples that can be the witnessing one: `x0` is
//! adjacent to both ends of the `x1 xk`-path it closes into a hole, `k = 5`
//! is `k = 4` with `x4`, `x5` swapped, and `x3` is only varied where it can
//! change one of the deleted sets. In case 2 the target `v` is drawn from
//! `X1 ∩ N(x0)`, which holds the witness `x1`.

use rayon::prelude::*;

use crate::graph::{certify_hole, Graph, Hole, Vertex, VertexSet};
use crate::odd::join_cycle;
use crate::odd::types::{DetectorOutcome, Provenance};
use crate::paths::{bfs_avoiding, canonical_path, distances_avoiding, INF};

pub fn find_general(g: &Graph) -> DetectorOutcome {
    find_general_bounded(g, usize::MAX)
}

/// As [`find_general`], skipping candidates longer than `bound`.
pub fn find_general_bounded(g: &Graph, bound: usize) -> DetectorOutcome {
    let best = (0..g.n())
        .into_par_iter()
        .filter_map(|x0| {
            let mut s = Search { g, best: None, bound };
            s.from_x0(x0);
            s.best
        })
        .min();
    DetectorOutcome { candidate: best, guarantee_tag: Provenance::General }
}

struct Search<'g> {
    g: &'g Graph,
    best: Option<Hole>,
    bound: usize,
}

/// Roles of one tuple; `x3` is `None` when its value cannot matter.
#[derive(Debug, Clone, Copy)]
struct Roles {
    x0: Vertex,
    xj: Vertex,
    x3: Option<Vertex>,
    x4: Vertex,
    x5: Vertex,
    xk: Vertex,
}

impl Roles {
    fn distinct(&self) -> bool {
        let mut v = vec![self.x0, self.xj, self.x4, self.x5];
        v.extend(self.x3);
        let k = v.len();
        v.sort_unstable();
        v.dedup();
        v.len() == k
    }

    fn exempt(&self, n: usize, extra: &[Vertex]) -> VertexSet {
        let mut s = VertexSet::from_vertices(n, [self.x4, self.x5].into_iter().chain(extra.iter().copied()));
        if let Some(x3) = self.x3 {
            s.insert(x3);
        }
        s
    }
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

    fn from_x0(&mut self, x0: Vertex) {
        let g = self.g;
        let nx0 = g.neighbors(x0).to_vec();
        let edges: Vec<(Vertex, Vertex)> = g.edges().collect();
        for &xk in &nx0 {
            // k = 3: xk = x3, and only the set {x4, x5} matters.
            for &(x4, x5) in &edges {
                let base = Roles { x0, xj: xk, x3: Some(xk), x4, x5, xk };
                for &x1 in &nx0 {
                    self.case1(Roles { xj: x1, ..base });
                }
                for x2 in 0..g.n() {
                    self.case2(Roles { xj: x2, ..base });
                }
            }
            // k = 4 (k = 5 is the same with x4, x5 renamed).
            let x4 = xk;
            for &x5 in g.neighbors(x4) {
                let near = g.closed_neighborhood_of(&g.set_of([x0, x4, x5]));
                let base = Roles { x0, xj: xk, x3: None, x4, x5, xk };
                for &x1 in &nx0 {
                    for x3 in std::iter::once(None).chain(near.iter().map(Some)) {
                        self.case1(Roles { xj: x1, x3, ..base });
                    }
                }
                for x2 in 0..g.n() {
                    let extra = self.case2(Roles { xj: x2, ..base });
                    let mut x3s = near.clone();
                    x3s.union_with(&extra);
                    for x3 in x3s.iter() {
                        self.case2(Roles { xj: x2, x3: Some(x3), ..base });
                    }
                }
            }
        }
    }

    fn case1(&mut self, r: Roles) {
        let g = self.g;
        let n = g.n();
        let (x1, xk) = (r.xj, r.xk);
        if x1 == xk || !r.distinct() {
            return;
        }
        let mut s = g.closed_neighborhood_of(&g.set_of([r.x0, r.x4, r.x5]));
        s.difference_with(&r.exempt(n, &[x1]));
        let Some((p, inner)) = shortest_with_interiors(g, &s, x1, xk) else { return };
        let plen = p.len() - 1;
        if plen + 2 > self.limit() {
            return;
        }
        let mut f0 = g.row(x1).intersection(g.row(xk));
        let mut ni = g.closed_neighborhood_of(&inner);
        ni.remove(x1);
        ni.remove(xk);
        f0.union_with(&ni);
        if f0.contains(x1) || f0.contains(xk) {
            return;
        }
        let t1 = bfs_avoiding(g, x1, &f0).expect("x1 kept");
        let tk = bfs_avoiding(g, xk, &f0).expect("xk kept");
        for v in 0..n {
            if v == x1 || v == xk || !t1.reached(v) || !tk.reached(v) {
                continue;
            }
            let total = plen + t1.raw_dist(v) as usize + tk.raw_dist(v) as usize;
            if total.is_multiple_of(2) || total > self.limit() {
                continue;
            }
            let p1 = t1.path_to(v).unwrap();
            let pk = tk.path_to(v).unwrap();
            // N_{G0}[P1(v) - v] ∩ V(Pk(v)) = {v}
            let clash =
                pk[..pk.len() - 1].iter().any(|&w| p1[..p1.len() - 1].iter().any(|&q| q == w || g.adjacent(q, w)));
            if clash {
                continue;
            }
            let back: Vec<Vertex> = pk.iter().rev().copied().collect();
            let seq = join_cycle(&[&p, &back[..], &p1.iter().rev().copied().collect::<Vec<_>>()]);
            if let Ok(h) = certify_hole(g, &seq) {
                self.offer(h);
            }
        }
    }

    /// Returns the vertices outside `X1` whose exemption in `G1` depends on
    /// `x3`, so that the caller can vary `x3` over them.
    fn case2(&mut self, r: Roles) -> VertexSet {
        let g = self.g;
        let n = g.n();
        let none = VertexSet::empty(n);
        let (x2, xk) = (r.xj, r.xk);
        if x2 == xk || !r.distinct() {
            return none;
        }
        let core = g.set_of([r.x0, r.x4, r.x5]);
        let mut s = g.closed_neighborhood_of(&core);
        s.difference_with(&r.exempt(n, &[]));
        if s.contains(x2) {
            return none;
        }
        let Some((p, inner)) = shortest_with_interiors(g, &s, x2, xk) else { return none };
        let plen = p.len() - 1;
        if plen < 3 || plen + 2 > self.limit() {
            return none;
        }
        // H1, I1, X1
        let mut s1 = g.closed_neighborhood_of(&core.union(&inner));
        s1.remove(x2);
        let d1 = distances_avoiding(g, x2, &s1);
        let i1 = VertexSet::from_vertices(n, (0..n).filter(|&v| d1[v] != INF && d1[v] as usize <= plen - 3));
        let x1s = g.neighborhood_of(&i1);
        // G1
        let mut f1 = g.neighborhood_of(&x1s);
        f1.intersect_with(g.row(xk));
        let mut around = g.neighborhood_of(&i1.union(&inner));
        around.difference_with(&x1s);
        let dependent = {
            let mut d = around.clone();
            for w in [x2, r.x4, r.x5] {
                d.remove(w);
            }
            d
        };
        around.difference_with(&r.exempt(n, &[x2]));
        f1.union_with(&around);
        if f1.contains(x2) || f1.contains(xk) {
            return dependent;
        }
        let mut f0 = f1.union(&x1s);
        for v in x1s.iter() {
            if v == x2 || v == xk || f1.contains(v) || !g.adjacent(v, r.x0) {
                continue;
            }
            f0.remove(v);
            if !f0.contains(x2) && !f0.contains(xk) {
                let t2 = bfs_avoiding(g, x2, &f0).expect("x2 kept");
                let tk = bfs_avoiding(g, xk, &f0).expect("xk kept");
                if t2.reached(v) && tk.reached(v) {
                    let total = plen + t2.raw_dist(v) as usize + tk.raw_dist(v) as usize;
                    if total % 2 == 1 && total <= self.limit() {
                        let p2 = t2.path_to(v).unwrap();
                        let pk: Vec<Vertex> = tk.path_to(v).unwrap().into_iter().rev().collect();
                        let back: Vec<Vertex> = p2.into_iter().rev().collect();
                        // P runs x2..xk, then xk..v, then v..x2.
                        let seq = join_cycle(&[&p, &pk, &back]);
                        if let Ok(h) = certify_hole(g, &seq) {
                            self.offer(h);
                        }
                    }
                }
            }
            f0.insert(v);
        }
        dependent
    }
}

/// Canonical shortest `uv`-path of `G - x` and the union of the interiors
/// of all shortest `uv`-paths there.
fn shortest_with_interiors(g: &Graph, x: &VertexSet, u: Vertex, v: Vertex) -> Option<(Vec<Vertex>, VertexSet)> {
    let p = canonical_path(g, x, u, v)?;
    let du = distances_avoiding(g, u, x);
    let dv = distances_avoiding(g, v, x);
    let len = du[v];
    let inner = VertexSet::from_vertices(
        g.n(),
        (0..g.n()).filter(|&w| w != u && w != v && du[w] != INF && dv[w] != INF && du[w] + dv[w] == len),
    );
    Some((p, inner))
}
