//! Exhaustive hole enumeration.
//!
//! Induced paths are grown from an anchor that is their minimum vertex; an
//! extension adjacent to any non-endpoint path vertex is pruned, and a cycle
//! is only closed back to the anchor. Each hole is reported once.

use crate::graph::{Graph, Hole, Vertex, VertexSet};

/// Every hole of a graph with length in `[4, max_len]`, sorted by [`Hole`]'s order.
#[derive(Debug, Clone, Default)]
pub struct HoleInventory {
    pub holes: Vec<Hole>,
    pub max_len: Option<usize>,
}

impl HoleInventory {
    pub fn len(&self) -> usize {
        self.holes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.holes.is_empty()
    }

    pub fn odd(&self) -> impl Iterator<Item = &Hole> {
        self.holes.iter().filter(|h| h.is_odd())
    }

    pub fn even(&self) -> impl Iterator<Item = &Hole> {
        self.holes.iter().filter(|h| h.is_even())
    }

    pub fn of_length(&self, k: usize) -> impl Iterator<Item = &Hole> {
        self.holes.iter().filter(move |h| h.len() == k)
    }

    pub fn shortest_odd(&self) -> Option<&Hole> {
        self.odd().next()
    }

    pub fn shortest_even(&self) -> Option<&Hole> {
        self.even().next()
    }

    /// Keeps holes satisfying `keep`.
    pub fn filtered(mut self, keep: impl Fn(&Hole) -> bool) -> HoleInventory {
        self.holes.retain(|h| keep(h));
        self
    }
}

/// Calls `visit` on every hole (as a raw cyclic sequence) of length at most
/// `*bound`. `visit` may lower `*bound` to prune the remaining search.
pub fn for_each_hole<F>(g: &Graph, bound: &mut usize, mut visit: F)
where
    F: FnMut(&[Vertex], &mut usize),
{
    let n = g.n();
    let mut path = Vec::with_capacity(n);
    let mut on_path = VertexSet::empty(n);
    for s in 0..n {
        if *bound < 4 {
            return;
        }
        path.clear();
        path.push(s);
        on_path.insert(s);
        extend(g, &mut path, &mut on_path, bound, &mut visit);
        on_path.remove(s);
    }
}

fn extend<F>(g: &Graph, path: &mut Vec<Vertex>, on_path: &mut VertexSet, bound: &mut usize, visit: &mut F)
where
    F: FnMut(&[Vertex], &mut usize),
{
    let anchor = path[0];
    let last = *path.last().unwrap();
    let k = path.len();
    if k >= *bound {
        return;
    }
    for &w in g.neighbors(last) {
        if w <= anchor || on_path.contains(w) || interior_adjacent(g, path, w) {
            continue;
        }
        if k >= 2 && g.adjacent(anchor, w) {
            // Closing vertex; `path[1] < w` reports each hole in one direction.
            if k + 1 >= 4 && path[1] < w {
                path.push(w);
                visit(path, bound);
                path.pop();
            }
            continue;
        }
        path.push(w);
        on_path.insert(w);
        extend(g, path, on_path, bound, visit);
        on_path.remove(w);
        path.pop();
    }
}

/// Whether `w` is adjacent to some vertex of `path[1..len-1]`.
#[inline]
fn interior_adjacent(g: &Graph, path: &[Vertex], w: Vertex) -> bool {
    let k = path.len();
    k > 2 && path[1..k - 1].iter().any(|&p| g.adjacent(p, w))
}

/// Complete inventory of holes of length `4..=max_len` (unbounded if `None`).
pub fn enumerate_holes(g: &Graph, max_len: Option<usize>) -> HoleInventory {
    let mut holes = Vec::new();
    let mut bound = max_len.unwrap_or(usize::MAX).min(g.n());
    for_each_hole(g, &mut bound, |cyc, _| holes.push(Hole::from_certified(g, cyc.to_vec())));
    holes.sort();
    HoleInventory { holes, max_len }
}

/// Shortest odd hole by exhaustive search with pruning against the best found.
pub fn oracle_shortest_odd_hole(g: &Graph) -> Option<Hole> {
    shortest_with_parity(g, 1)
}

pub fn oracle_shortest_even_hole(g: &Graph) -> Option<Hole> {
    shortest_with_parity(g, 0)
}

fn shortest_with_parity(g: &Graph, parity: usize) -> Option<Hole> {
    let mut best: Option<Hole> = None;
    let mut bound = g.n();
    for_each_hole(g, &mut bound, |cyc, bound| {
        if cyc.len() % 2 != parity {
            return;
        }
        let h = Hole::from_certified(g, cyc.to_vec());
        if best.as_ref().is_none_or(|b| h < *b) {
            *bound = h.len();
            best = Some(h);
        }
    });
    best
}

/// Independent double oracle: tests every vertex subset for inducing a cycle.
/// Exponential; meant for `n <= 12` or so.
pub fn naive_holes(g: &Graph) -> Vec<Hole> {
    let n = g.n();
    assert!(n < 24, "naive_holes is exponential in n");
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() < 4 {
            continue;
        }
        let s = VertexSet::from_vertices(n, (0..n).filter(|&v| mask >> v & 1 == 1));
        if let Some(order) = crate::graph::cycle_order(g, &s) {
            out.push(Hole::from_certified(g, order));
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edge_list(10, &e).unwrap()
    }

    #[test]
    fn complete_graph_has_no_holes() {
        let mut e = Vec::new();
        for u in 0..4 {
            for v in u + 1..4 {
                e.push((u, v));
            }
        }
        assert!(enumerate_holes(&Graph::from_edge_list(4, &e).unwrap(), None).is_empty());
    }

    #[test]
    fn c5_has_one_hole() {
        let inv = enumerate_holes(&cycle(5), None);
        assert_eq!(inv.len(), 1);
        assert_eq!(inv.holes[0].vertices(), &[0, 1, 2, 3, 4]);
    }

    #[test]
    fn petersen_hole_counts() {
        // Frozen from this enumerator; the double oracle agrees below.
        let inv = enumerate_holes(&petersen(), Some(5));
        assert_eq!(inv.len(), 12);
        let all = enumerate_holes(&petersen(), None);
        assert_eq!(all.holes, naive_holes(&petersen()));
    }

    #[test]
    fn shortest_parities() {
        let g = cycle(7);
        assert_eq!(oracle_shortest_odd_hole(&g).map(|h| h.len()), Some(7));
        assert_eq!(oracle_shortest_even_hole(&g), None);
    }
}
