//! Vertex sets whose deletion clears a shortest even hole.
//!
//! For 4-hole-free graphs, some shortest even hole `C` survives the deletion
//! of one of these sets with no vertex left that has three pairwise
//! non-adjacent neighbours on `C`.

use crate::even::cliques::maximal_cliques;
use crate::graph::{Graph, Hole, Vertex, VertexSet};
use crate::oracle::holes::{enumerate_holes, HoleInventory};

/// Every even hole of length `< bound`.
pub fn list_short_even_holes(g: &Graph, bound: usize) -> HoleInventory {
    if bound < 6 {
        return HoleInventory { holes: Vec::new(), max_len: Some(bound.saturating_sub(2)) };
    }
    enumerate_holes(g, Some(bound - 2)).filtered(Hole::is_even)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClearingSource {
    /// `N(v) \ {u, w}` for the 2-path `u v w`.
    TwoPath { u: Vertex, v: Vertex, w: Vertex },
    /// `V(K)` for a maximal clique `K`.
    Clique,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClearingSets {
    pub sets: Vec<(ClearingSource, VertexSet)>,
}

impl ClearingSets {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(ClearingSource, VertexSet)> {
        self.sets.iter()
    }
}

pub fn clearing_sets(g: &Graph) -> ClearingSets {
    let mut sets = Vec::new();
    for v in 0..g.n() {
        let ns = g.neighbors(v);
        for (i, &u) in ns.iter().enumerate() {
            for &w in &ns[i + 1..] {
                let mut s = g.row(v).clone();
                s.remove(u);
                s.remove(w);
                sets.push((ClearingSource::TwoPath { u, v, w }, s));
            }
        }
    }
    sets.extend(maximal_cliques(g).into_iter().map(|k| (ClearingSource::Clique, k)));
    ClearingSets { sets }
}

/// `J_G(C)`: vertices off `C` with three pairwise non-adjacent neighbours on `C`.
pub fn clear_blockers(g: &Graph, c: &Hole) -> VertexSet {
    let on = c.vertex_set(g.n());
    let mut out = g.empty_set();
    for x in 0..g.n() {
        if on.contains(x) {
            continue;
        }
        let nbrs: Vec<Vertex> = c.vertices().iter().copied().filter(|&v| g.adjacent(x, v)).collect();
        let stable_triple = (0..nbrs.len()).any(|i| {
            (i + 1..nbrs.len()).any(|j| {
                !g.adjacent(nbrs[i], nbrs[j])
                    && (j + 1..nbrs.len()).any(|k| !g.adjacent(nbrs[i], nbrs[k]) && !g.adjacent(nbrs[j], nbrs[k]))
            })
        });
        if stable_triple {
            out.insert(x);
        }
    }
    out
}

/// Whether deleting `x` keeps `c` and leaves it clear.
pub fn clears(g: &Graph, c: &Hole, x: &VertexSet) -> bool {
    c.vertex_set(g.n()).is_disjoint(x) && clear_blockers(g, c).is_subset(x)
}
