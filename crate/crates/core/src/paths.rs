//! Restricted BFS, canonical shortest paths, per-edge restricted distance
//! tables and c-trails.
//!
//! Tie-breaking is canonical everywhere: BFS scans neighbours in increasing id
//! order, and the path between `u` and `v` is always read off the tree rooted
//! at `min(u, v)`. Two calls with the same input return the same sequence.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{Graph, PathSeq, Vertex, VertexSet};

/// Distance sentinel for "unreachable".
pub const INF: u16 = u16::MAX;
const NONE: u32 = u32::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("source/endpoint {0} lies in the forbidden set")]
    EndpointForbidden(Vertex),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(Vertex, Vertex),
}

#[derive(Debug, Clone)]
pub struct BfsTree {
    pub source: Vertex,
    pub forbidden: VertexSet,
    dist: Vec<u16>,
    parent: Vec<u32>,
    order: Vec<Vertex>,
}

impl BfsTree {
    pub fn dist(&self, v: Vertex) -> Option<usize> {
        (self.dist[v] != INF).then_some(self.dist[v] as usize)
    }

    #[inline]
    pub fn raw_dist(&self, v: Vertex) -> u16 {
        self.dist[v]
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        (self.parent[v] != NONE).then_some(self.parent[v] as usize)
    }

    pub fn reached(&self, v: Vertex) -> bool {
        self.dist[v] != INF
    }

    /// Vertices in the order BFS dequeued them.
    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    /// Tree path `source .. v`, or `None` if unreachable.
    pub fn path_to(&self, v: Vertex) -> Option<Vec<Vertex>> {
        if !self.reached(v) {
            return None;
        }
        let mut out = Vec::with_capacity(self.dist[v] as usize + 1);
        let mut cur = v;
        out.push(cur);
        while cur != self.source {
            cur = self.parent[cur] as usize;
            out.push(cur);
        }
        out.reverse();
        Some(out)
    }

    /// Reached vertices as a set.
    pub fn reached_set(&self) -> VertexSet {
        VertexSet::from_vertices(self.dist.len(), self.order.iter().copied())
    }
}

fn bfs_raw(g: &Graph, source: Vertex, forbidden: &VertexSet) -> (Vec<u16>, Vec<u32>, Vec<Vertex>) {
    let n = g.n();
    let mut dist = vec![INF; n];
    let mut parent = vec![NONE; n];
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        let dv = dist[v];
        for &w in g.neighbors(v) {
            if dist[w] == INF && !forbidden.contains(w) {
                dist[w] = dv + 1;
                parent[w] = v as u32;
                queue.push_back(w);
            }
        }
    }
    (dist, parent, order)
}

/// BFS in `G - forbidden` from `source`.
pub fn bfs_avoiding(g: &Graph, source: Vertex, forbidden: &VertexSet) -> Result<BfsTree, SearchError> {
    if forbidden.contains(source) {
        return Err(SearchError::EndpointForbidden(source));
    }
    let (dist, parent, order) = bfs_raw(g, source, forbidden);
    Ok(BfsTree { source, forbidden: forbidden.clone(), dist, parent, order })
}

/// Plain BFS distances from `source`, skipping `forbidden`. Cheaper than a
/// full [`BfsTree`] when only distances are needed.
pub fn distances_avoiding(g: &Graph, source: Vertex, forbidden: &VertexSet) -> Vec<u16> {
    bfs_raw(g, source, forbidden).0
}

/// Canonical shortest `uv`-path of `G - x`, oriented from `u` to `v`.
pub fn shortest_path_avoiding(g: &Graph, x: &VertexSet, u: Vertex, v: Vertex) -> Result<Option<PathSeq>, SearchError> {
    for e in [u, v] {
        if x.contains(e) {
            return Err(SearchError::EndpointForbidden(e));
        }
    }
    Ok(canonical_path(g, x, u, v).map(|p| PathSeq::trusted(g, p)))
}

/// Same as [`shortest_path_avoiding`] but returns raw vertices; endpoints are
/// assumed not to lie in `x`.
pub fn canonical_path(g: &Graph, x: &VertexSet, u: Vertex, v: Vertex) -> Option<Vec<Vertex>> {
    let (lo, hi) = (u.min(v), u.max(v));
    let (dist, parent, _) = bfs_raw(g, lo, x);
    if dist[hi] == INF {
        return None;
    }
    let mut p = Vec::with_capacity(dist[hi] as usize + 1);
    let mut cur = hi;
    p.push(cur);
    while cur != lo {
        cur = parent[cur] as usize;
        p.push(cur);
    }
    // p runs hi -> lo
    if u == lo {
        p.reverse();
    }
    Some(p)
}

/// Interior vertices of all shortest `uv`-paths of `g`.
pub fn shortest_interior(g: &Graph, u: Vertex, v: Vertex) -> VertexSet {
    shortest_interior_avoiding(g, &g.empty_set(), u, v)
}

/// Interior vertices of all shortest `uv`-paths of `G - x`.
pub fn shortest_interior_avoiding(g: &Graph, x: &VertexSet, u: Vertex, v: Vertex) -> VertexSet {
    let mut out = g.empty_set();
    if u == v || x.contains(u) || x.contains(v) {
        return out;
    }
    let du = distances_avoiding(g, u, x);
    if du[v] == INF {
        return out;
    }
    let dv = distances_avoiding(g, v, x);
    let d = du[v] as u32;
    for w in 0..g.n() {
        if w != u && w != v && du[w] != INF && dv[w] != INF && du[w] as u32 + dv[w] as u32 == d {
            out.insert(w);
        }
    }
    out
}

/// Union of canonical shortest `c_{i-1} c_i` paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CTrail {
    /// The canonical segments, each oriented from `c_{i-1}` to `c_i`.
    pub segments: Vec<Vec<Vertex>>,
    pub vertices: VertexSet,
}

impl CTrail {
    pub fn total_length(&self) -> usize {
        self.segments.iter().map(|s| s.len() - 1).sum()
    }

    /// Distinct edges of the union, as `(min, max)` pairs, sorted.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut es: Vec<_> =
            self.segments.iter().flat_map(|s| s.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1])))).collect();
        es.sort_unstable();
        es.dedup();
        es
    }

    /// The concatenation when it visits no vertex twice.
    pub fn as_simple_sequence(&self) -> Option<Vec<Vertex>> {
        let mut seq: Vec<Vertex> = vec![self.segments.first()?[0]];
        for s in &self.segments {
            seq.extend_from_slice(&s[1..]);
        }
        let set = VertexSet::from_vertices(self.vertices.universe(), seq.iter().copied());
        (set.len() == seq.len()).then_some(seq)
    }
}

/// c-trail of `g` through `cs`; `None` if some consecutive pair is disconnected.
pub fn c_trail(g: &Graph, cs: &[Vertex]) -> Option<CTrail> {
    c_trail_avoiding(g, &g.empty_set(), cs)
}

pub fn c_trail_avoiding(g: &Graph, x: &VertexSet, cs: &[Vertex]) -> Option<CTrail> {
    let mut vertices = g.empty_set();
    let mut segments = Vec::with_capacity(cs.len().saturating_sub(1));
    if let Some(&c0) = cs.first() {
        vertices.insert(c0);
    }
    for w in cs.windows(2) {
        let seg = canonical_path(g, x, w[0], w[1])?;
        for &v in &seg {
            vertices.insert(v);
        }
        segments.push(seg);
    }
    Some(CTrail { segments, vertices })
}

/// All-pairs BFS distances and canonical shortest paths of a graph (or of a
/// graph minus a fixed set).
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u16>,
    parent: Vec<u32>,
}

impl DistanceMatrix {
    pub fn new(g: &Graph) -> DistanceMatrix {
        Self::avoiding(g, &g.empty_set())
    }

    pub fn avoiding(g: &Graph, x: &VertexSet) -> DistanceMatrix {
        use rayon::prelude::*;
        let n = g.n();
        let rows: Vec<(Vec<u16>, Vec<u32>)> = (0..n)
            .into_par_iter()
            .map(|s| {
                if x.contains(s) {
                    (vec![INF; n], vec![NONE; n])
                } else {
                    let (d, p, _) = bfs_raw(g, s, x);
                    (d, p)
                }
            })
            .collect();
        let mut dist = Vec::with_capacity(n * n);
        let mut parent = Vec::with_capacity(n * n);
        for (d, p) in rows {
            dist.extend(d);
            parent.extend(p);
        }
        DistanceMatrix { n, dist, parent }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn raw(&self, u: Vertex, v: Vertex) -> u16 {
        self.dist[u * self.n + v]
    }

    pub fn dist(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let d = self.raw(u, v);
        (d != INF).then_some(d as usize)
    }

    /// Canonical shortest path from `u` to `v`.
    pub fn path(&self, u: Vertex, v: Vertex) -> Option<Vec<Vertex>> {
        let (lo, hi) = (u.min(v), u.max(v));
        if self.raw(lo, hi) == INF {
            return None;
        }
        let row = &self.parent[lo * self.n..(lo + 1) * self.n];
        let mut p = vec![hi];
        let mut cur = hi;
        while cur != lo {
            cur = row[cur] as usize;
            p.push(cur);
        }
        if u == lo {
            p.reverse();
        }
        Some(p)
    }
}

/// `p_e`, `φ_e` and `P_e` for one edge `e`, where `P_e(u,v)` is a shortest
/// `uv`-path of `G_e(u,v) = G - (N(e) \ {u,v})`.
#[derive(Debug, Clone)]
pub struct RestrictedDistanceTable {
    pub edge: (Vertex, Vertex),
    n: usize,
    p: Vec<u16>,
    /// Parent pointers of the BFS rooted at each `u` in `G - (N(e)\{u})`.
    parent: Vec<u32>,
    /// For targets blocked in that BFS (members of `N(e)`), the neighbour
    /// through which the shortest path enters them.
    last_hop: Vec<u32>,
    /// Neighbour of the root on the tree path to each vertex.
    first_hop: Vec<u32>,
}

impl RestrictedDistanceTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `p_e(u,v)`, or `None` when no path exists.
    pub fn p(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let d = self.p[u * self.n + v];
        (d != INF).then_some(d as usize)
    }

    #[inline]
    pub fn raw_p(&self, u: Vertex, v: Vertex) -> u16 {
        self.p[u * self.n + v]
    }

    /// `φ_e(u,v)`: the neighbour of `u` on `P_e(u,v)`.
    pub fn phi(&self, u: Vertex, v: Vertex) -> Option<Vertex> {
        if u == v || self.raw_p(u, v) == INF {
            return None;
        }
        let n = self.n;
        let f = if u < v {
            self.first_hop[u * n + v]
        } else {
            let par = self.parent[v * n + u];
            if par != NONE {
                par
            } else {
                self.last_hop[v * n + u]
            }
        };
        Some(f as usize)
    }

    /// `P_e(u,v)` oriented from `u` to `v`.
    pub fn path(&self, u: Vertex, v: Vertex) -> Option<Vec<Vertex>> {
        if self.raw_p(u, v) == INF {
            return None;
        }
        let (lo, hi) = (u.min(v), u.max(v));
        let n = self.n;
        let mut p = vec![hi];
        let mut cur = hi;
        if lo != hi && self.parent[lo * n + hi] == NONE {
            cur = self.last_hop[lo * n + hi] as usize;
            p.push(cur);
        }
        while cur != lo {
            cur = self.parent[lo * n + cur] as usize;
            p.push(cur);
        }
        if u == lo {
            p.reverse();
        }
        Some(p)
    }
}

pub fn build_restricted_table(g: &Graph, e: (Vertex, Vertex)) -> Result<RestrictedDistanceTable, SearchError> {
    if e.0 >= g.n() || e.1 >= g.n() || !g.adjacent(e.0, e.1) {
        return Err(SearchError::NotAnEdge(e.0, e.1));
    }
    let n = g.n();
    let ne = g.edge_neighborhood(e.0, e.1);
    let mut p = vec![INF; n * n];
    let mut parent = vec![NONE; n * n];
    let mut last_hop = vec![NONE; n * n];
    let mut first_hop = vec![NONE; n * n];
    let mut forbidden = ne.clone();
    for u in 0..n {
        let was = forbidden.remove(u);
        let (dist, par, order) = bfs_raw(g, u, &forbidden);
        if was {
            forbidden.insert(u);
        }
        let base = u * n;
        parent[base..base + n].copy_from_slice(&par);
        for &v in &order {
            p[base + v] = dist[v];
            if v != u {
                let pv = par[v];
                first_hop[base + v] = if pv as usize == u { v as u32 } else { first_hop[base + pv as usize] };
            }
        }
        // Targets inside N(e): enter through the earliest-dequeued neighbour.
        let mut rank = vec![u32::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i as u32;
        }
        for v in ne.iter() {
            if v == u {
                continue;
            }
            let mut best: Option<(u16, Vertex)> = None;
            for &w in g.neighbors(v) {
                if dist[w] == INF {
                    continue;
                }
                best = match best {
                    None => Some((dist[w], w)),
                    Some((bd, bw)) if dist[w] < bd || (dist[w] == bd && rank[w] < rank[bw]) => Some((dist[w], w)),
                    keep => keep,
                };
            }
            if let Some((d, w)) = best {
                p[base + v] = d + 1;
                last_hop[base + v] = w as u32;
                first_hop[base + v] = if w == u { v as u32 } else { first_hop[base + w] };
            }
        }
    }
    Ok(RestrictedDistanceTable { edge: e, n, p, parent, last_hop, first_hop })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn set(n: usize, vs: &[Vertex]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied())
    }

    #[test]
    fn bfs_examples() {
        let g = cycle(6);
        assert_eq!(bfs_avoiding(&g, 0, &set(6, &[])).unwrap().dist(3), Some(3));
        assert_eq!(bfs_avoiding(&g, 0, &set(6, &[1])).unwrap().dist(2), Some(4));
        assert_eq!(bfs_avoiding(&g, 0, &set(6, &[1, 5])).unwrap().dist(3), None);
        assert_eq!(bfs_avoiding(&g, 0, &set(6, &[0])).unwrap_err(), SearchError::EndpointForbidden(0));
    }

    #[test]
    fn shortest_path_examples() {
        let g = cycle(6);
        let p = shortest_path_avoiding(&g, &set(6, &[]), 0, 3).unwrap().unwrap();
        assert_eq!(p.len(), 3);
        let p = shortest_path_avoiding(&g, &set(6, &[1]), 0, 2).unwrap().unwrap();
        assert_eq!(p.vertices(), &[0, 5, 4, 3, 2]);
        assert!(shortest_path_avoiding(&g, &set(6, &[1, 5]), 0, 3).unwrap().is_none());
        // orientation follows the arguments, the vertex set does not
        let q = shortest_path_avoiding(&g, &set(6, &[]), 3, 0).unwrap().unwrap();
        assert_eq!(q.reversed(), p_of(&g, 0, 3));
    }

    fn p_of(g: &Graph, u: Vertex, v: Vertex) -> PathSeq {
        shortest_path_avoiding(g, &g.empty_set(), u, v).unwrap().unwrap()
    }

    #[test]
    fn interior_examples() {
        assert_eq!(shortest_interior(&cycle(6), 0, 3).to_vec(), vec![1, 2, 4, 5]);
        assert_eq!(shortest_interior(&cycle(5), 0, 2).to_vec(), vec![1]);
        let path = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(shortest_interior(&path, 0, 2).to_vec(), vec![1]);
        assert!(shortest_interior(&cycle(6), 0, 1).is_empty());
    }

    #[test]
    fn c_trail_examples() {
        let t = c_trail(&cycle(8), &[0, 2, 4]).unwrap();
        assert_eq!(t.segments, vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert_eq!(t.as_simple_sequence(), Some(vec![0, 1, 2, 3, 4]));
        let single = c_trail(&cycle(8), &[5]).unwrap();
        assert_eq!(single.vertices.to_vec(), vec![5]);
        assert!(single.edges().is_empty());
        let back = c_trail(&cycle(6), &[0, 3, 0]).unwrap();
        assert_eq!(back.segments[0], vec![0, 1, 2, 3]);
        assert_eq!(back.segments[1], vec![3, 2, 1, 0]);
        assert_eq!(back.edges().len(), 3);
        assert!(back.as_simple_sequence().is_none());
    }

    #[test]
    fn restricted_table_on_c9() {
        let g = cycle(9);
        let t = build_restricted_table(&g, (0, 1)).unwrap();
        assert_eq!(t.p(2, 8), Some(3));
        assert_eq!(t.path(2, 8), Some(vec![2, 1, 0, 8]));
        assert_eq!(t.p(3, 7), Some(4));
        assert_eq!(t.phi(3, 7), Some(4));
        assert_eq!(t.phi(7, 3), Some(6));
        assert_eq!(t.p(2, 2), Some(0));
        assert!(build_restricted_table(&g, (0, 2)).is_err());
    }

    #[test]
    fn restricted_table_on_k4() {
        let mut edges = Vec::new();
        for u in 0..4 {
            for v in u + 1..4 {
                edges.push((u, v));
            }
        }
        let g = Graph::from_edge_list(4, &edges).unwrap();
        let t = build_restricted_table(&g, (0, 1)).unwrap();
        for (u, v) in g.edges() {
            assert_eq!(t.p(u, v), Some(1));
            assert_eq!(t.phi(u, v), Some(v));
        }
    }
}
