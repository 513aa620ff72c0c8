//! Shortest odd holes that have a spade.
//!
//! For every connected `D` with `|D| <= 5`, every non-adjacent pair `u, v` in
//! `D` and every induced `uv`-path `Q` of `G[D]` that has a partner induced
//! `uv`-path of length `‖Q‖ ± 1`, the candidate is `Q` closed up by a shortest
//! `uv`-path of `G - B`, `B = N[D \ {u,v}] \ {u,v}`. Candidates are kept only
//! if they certify as odd holes for which `D` is a spade.

use rayon::prelude::*;

use crate::graph::{certify_hole, Graph, Hole, Vertex, VertexSet};
use crate::odd::types::{spade_blocker, DetectorOutcome, Provenance};
use crate::oracle::properties::certify_spade;
use crate::paths::canonical_path;

pub fn find_shallow(g: &Graph) -> DetectorOutcome {
    find_shallow_bounded(g, usize::MAX)
}

/// As [`find_shallow`], ignoring candidates longer than `bound`.
pub fn find_shallow_bounded(g: &Graph, bound: usize) -> DetectorOutcome {
    let best = (0..g.n())
        .into_par_iter()
        .filter_map(|root| {
            let mut best: Option<Hole> = None;
            for_each_connected_set(g, root, 5, |d| {
                if d.len() >= 3 {
                    scan_set(g, d, bound, &mut best);
                }
            });
            best
        })
        .min();
    DetectorOutcome { candidate: best, guarantee_tag: Provenance::Shallow }
}

fn scan_set(g: &Graph, d: &[Vertex], bound: usize, best: &mut Option<Hole>) {
    let dset = VertexSet::from_vertices(g.n(), d.iter().copied());
    for (i, &u) in d.iter().enumerate() {
        for &v in &d[i + 1..] {
            if g.adjacent(u, v) {
                continue;
            }
            let paths = induced_paths(g, &dset, u, v);
            let has_len = |l: usize| paths.iter().any(|p| p.len() - 1 == l);
            let usable: Vec<&Vec<Vertex>> = paths
                .iter()
                .filter(|q| {
                    let l = q.len() - 1;
                    has_len(l + 1) || (l >= 1 && has_len(l - 1))
                })
                .collect();
            if usable.is_empty() {
                continue;
            }
            let b = spade_blocker(g, &dset, u, v);
            let Some(p) = canonical_path(g, &b, v, u) else { continue };
            for q in usable {
                let len = q.len() - 1 + p.len() - 1;
                if len % 2 == 0 || len > bound || best.as_ref().is_some_and(|h| h.len() < len) {
                    continue;
                }
                // q runs u..v, p runs v..u
                let mut seq = q.clone();
                seq.extend_from_slice(&p[1..p.len() - 1]);
                let Ok(h) = certify_hole(g, &seq) else { continue };
                if certify_spade(g, &h, &dset) && best.as_ref().is_none_or(|b| h < *b) {
                    *best = Some(h);
                }
            }
        }
    }
}

/// All induced `uv`-paths of `G[d]`, each from `u` to `v`.
fn induced_paths(g: &Graph, d: &VertexSet, u: Vertex, v: Vertex) -> Vec<Vec<Vertex>> {
    fn walk(g: &Graph, d: &VertexSet, path: &mut Vec<Vertex>, v: Vertex, out: &mut Vec<Vec<Vertex>>) {
        let last = *path.last().unwrap();
        if last == v {
            out.push(path.clone());
            return;
        }
        for &w in g.neighbors(last) {
            if !d.contains(w) || path.contains(&w) {
                continue;
            }
            if path[..path.len() - 1].iter().any(|&p| g.adjacent(p, w)) {
                continue;
            }
            path.push(w);
            walk(g, d, path, v, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    walk(g, d, &mut vec![u], v, &mut out);
    out
}

/// Every connected vertex set of size at most `k` whose minimum is `root`,
/// each exactly once (extension-set enumeration).
pub fn for_each_connected_set(g: &Graph, root: Vertex, k: usize, mut f: impl FnMut(&[Vertex])) {
    fn extend(
        g: &Graph,
        root: Vertex,
        k: usize,
        sub: &mut Vec<Vertex>,
        closed: &VertexSet,
        ext: Vec<Vertex>,
        f: &mut impl FnMut(&[Vertex]),
    ) {
        f(sub);
        if sub.len() == k {
            return;
        }
        let mut ext = ext;
        while let Some(w) = ext.pop() {
            let mut next_ext = ext.clone();
            for &x in g.neighbors(w) {
                if x > root && !closed.contains(x) && !next_ext.contains(&x) {
                    next_ext.push(x);
                }
            }
            let mut next_closed = closed.clone();
            next_closed.union_with(g.row(w));
            next_closed.insert(w);
            sub.push(w);
            extend(g, root, k, sub, &next_closed, next_ext, f);
            sub.pop();
        }
    }
    let ext: Vec<Vertex> = g.neighbors(root).iter().copied().filter(|&x| x > root).collect();
    let closed = g.closed_neighborhood(root);
    extend(g, root, k, &mut vec![root], &closed, ext, &mut f);
}
