//! Perfection by definition (χ = ω on every induced subgraph) and by odd
//! holes in the graph and its complement.

use crate::graph::{Graph, Hole, Side, VertexSet};
use crate::oracle::holes::oracle_shortest_odd_hole;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerfectVerdict {
    pub perfect: bool,
    /// A smallest induced subgraph with χ > ω, when not perfect.
    pub witness: Option<VertexSet>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpgtVerdict {
    pub perfect: bool,
    /// Shortest odd hole found, with the side it lives on. The hole's host is
    /// the complement graph when `side == Side::Complement`.
    pub witness: Option<(Side, Hole)>,
}

/// Adjacency as bitmasks; only for small graphs.
fn masks(g: &Graph) -> Vec<u32> {
    assert!(g.n() <= 32, "bitmask oracle limited to 32 vertices");
    (0..g.n()).map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w)).collect()
}

/// Clique number of `G[sub]`.
pub fn clique_number(g: &Graph, sub: &VertexSet) -> usize {
    let adj = masks(g);
    let mask = sub.iter().fold(0u32, |m, v| m | 1 << v);
    clique_in(&adj, mask)
}

fn clique_in(adj: &[u32], cand: u32) -> usize {
    fn grow(adj: &[u32], size: usize, cand: u32, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let mut c = cand;
        while c != 0 {
            if size + c.count_ones() as usize <= *best {
                return;
            }
            let v = c.trailing_zeros() as usize;
            c &= c - 1;
            grow(adj, size + 1, c & adj[v], best);
        }
    }
    let mut best = 0;
    grow(adj, 0, cand, &mut best);
    best
}

/// Chromatic number of `G[sub]` by backtracking with a clique lower bound.
pub fn chromatic_number(g: &Graph, sub: &VertexSet) -> usize {
    let adj = masks(g);
    let mask = sub.iter().fold(0u32, |m, v| m | 1 << v);
    chromatic_in(&adj, mask)
}

fn chromatic_in(adj: &[u32], mask: u32) -> usize {
    if mask == 0 {
        return 0;
    }
    let lower = clique_in(adj, mask);
    let verts: Vec<usize> = (0..32).filter(|&v| mask >> v & 1 == 1).collect();
    // Highest-degree-first ordering tightens the search.
    let mut order = verts.clone();
    order.sort_by_key(|&v| std::cmp::Reverse((adj[v] & mask).count_ones()));
    for k in lower..=verts.len() {
        let mut colour = vec![usize::MAX; 32];
        if colourable(adj, &order, 0, k, 0, &mut colour) {
            return k;
        }
    }
    unreachable!("a graph is always |V|-colourable")
}

fn colourable(adj: &[u32], order: &[usize], i: usize, k: usize, used: usize, colour: &mut [usize]) -> bool {
    if i == order.len() {
        return true;
    }
    let v = order[i];
    // Symmetry breaking: at most one new colour per step.
    for c in 0..k.min(used + 1) {
        let clash = (0..32).any(|w| adj[v] >> w & 1 == 1 && colour[w] == c);
        if !clash {
            colour[v] = c;
            if colourable(adj, order, i + 1, k, used.max(c + 1), colour) {
                return true;
            }
            colour[v] = usize::MAX;
        }
    }
    false
}

/// Perfection straight from the definition. Exponential in `n`.
pub fn oracle_is_perfect(g: &Graph) -> PerfectVerdict {
    let n = g.n();
    assert!(n <= 20, "definition-based perfection oracle is exponential");
    let adj = masks(g);
    let mut subsets: Vec<u32> = (1u32..(1u32 << n)).collect();
    subsets.sort_by_key(|m| (m.count_ones(), *m));
    for mask in subsets {
        // χ > ω needs at least five vertices (smallest imperfect graph is C5).
        if mask.count_ones() < 5 {
            continue;
        }
        if chromatic_in(&adj, mask) != clique_in(&adj, mask) {
            let w = VertexSet::from_vertices(n, (0..n).filter(|&v| mask >> v & 1 == 1));
            return PerfectVerdict { perfect: false, witness: Some(w) };
        }
    }
    PerfectVerdict { perfect: true, witness: None }
}

/// Perfection via the strong perfect graph theorem: no odd hole in `g` or its
/// complement.
pub fn oracle_spgt_perfect(g: &Graph) -> SpgtVerdict {
    if let Some(h) = oracle_shortest_odd_hole(g) {
        return SpgtVerdict { perfect: false, witness: Some((Side::Graph, h)) };
    }
    let co = g.complement();
    if let Some(h) = oracle_shortest_odd_hole(&co) {
        return SpgtVerdict { perfect: false, witness: Some((Side::Complement, h)) };
    }
    SpgtVerdict { perfect: true, witness: None }
}
