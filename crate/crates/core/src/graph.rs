//! Immutable simple graphs, vertex bitsets, induced paths and certified holes.

use std::cmp::Ordering;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use smallvec::SmallVec;
use thiserror::Error;

pub type Vertex = usize;

const WORD: usize = 64;

/// Bitset over `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: SmallVec<[u64; 2]>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        let len = n.div_ceil(WORD);
        VertexSet { n, words: SmallVec::from_elem(0, len) }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn from_vertices<I: IntoIterator<Item = Vertex>>(n: usize, vertices: I) -> Self {
        let mut s = Self::empty(n);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    /// Size of the universe, not the number of members.
    pub fn universe(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn insert(&mut self, v: Vertex) -> bool {
        debug_assert!(v < self.n, "vertex {v} outside universe {}", self.n);
        let (w, b) = (v / WORD, v % WORD);
        let had = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !had
    }

    #[inline]
    pub fn remove(&mut self, v: Vertex) -> bool {
        let (w, b) = (v / WORD, v % WORD);
        let had = self.words[w] >> b & 1 == 1;
        self.words[w] &= !(1 << b);
        had
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        v < self.n && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn first(&self) -> Option<Vertex> {
        self.iter().next()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i * WORD + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices (edge #{index})")]
    OutOfRange { index: usize, vertex: Vertex, n: usize },
    #[error("self-loop on vertex {vertex} (edge #{index})")]
    SelfLoop { index: usize, vertex: Vertex },
    #[error("duplicate edge {u}-{v} (edge #{index})")]
    DuplicateEdge { index: usize, u: Vertex, v: Vertex },
}

/// Which graph a certificate lives in: the input or its complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Graph,
    Complement,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Graph => "graph",
            Side::Complement => "complement",
        }
    }
}

/// Opaque identity of a constructed graph. Clones share it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GraphId(u64);

static NEXT_GRAPH_ID: AtomicU64 = AtomicU64::new(1);

fn fresh_id() -> GraphId {
    GraphId(NEXT_GRAPH_ID.fetch_add(1, AtomicOrdering::Relaxed))
}

/// Undirected simple graph on `0..n`, frozen after construction.
///
/// Keeps both sorted adjacency lists and a bitset row per vertex, so that
/// adjacency tests are O(1) and neighbourhood algebra is word-parallel.
#[derive(Clone)]
pub struct Graph {
    id: GraphId,
    n: usize,
    m: usize,
    adj: Vec<Vec<Vertex>>,
    rows: Vec<VertexSet>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

impl Graph {
    pub fn from_edge_list(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
        let mut rows = vec![VertexSet::empty(n); n];
        for (index, &(u, v)) in edges.iter().enumerate() {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::OutOfRange { index, vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { index, vertex: u });
            }
            if rows[u].contains(v) {
                return Err(GraphError::DuplicateEdge { index, u, v });
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Self::from_rows(rows))
    }

    /// Builds from edges, silently dropping duplicates. Loops and range errors
    /// are still rejected.
    pub fn from_edges_dedup(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
        let mut seen = vec![VertexSet::empty(n); n];
        let mut kept = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u < n && v < n && u != v {
                if seen[u].contains(v) {
                    continue;
                }
                seen[u].insert(v);
                seen[v].insert(u);
            }
            kept.push((u, v));
        }
        Self::from_edge_list(n, &kept)
    }

    fn from_rows(rows: Vec<VertexSet>) -> Graph {
        let n = rows.len();
        let adj: Vec<Vec<Vertex>> = rows.iter().map(|r| r.to_vec()).collect();
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Graph { id: fresh_id(), n, m, adj, rows }
    }

    pub fn empty(n: usize) -> Graph {
        Self::from_rows(vec![VertexSet::empty(n); n])
    }

    pub fn id(&self) -> GraphId {
        self.id
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    /// Open neighbourhood of `v` as a bitset row of the adjacency matrix.
    #[inline]
    pub fn row(&self, v: Vertex) -> &VertexSet {
        &self.rows[v]
    }

    #[inline]
    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.rows[u].contains(v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::empty(self.n)
    }

    pub fn set_of<I: IntoIterator<Item = Vertex>>(&self, vs: I) -> VertexSet {
        VertexSet::from_vertices(self.n, vs)
    }

    pub fn closed_neighborhood(&self, v: Vertex) -> VertexSet {
        let mut s = self.rows[v].clone();
        s.insert(v);
        s
    }

    /// `N[S]`: `S` together with every vertex adjacent to it.
    pub fn closed_neighborhood_of(&self, s: &VertexSet) -> VertexSet {
        let mut out = s.clone();
        for v in s.iter() {
            out.union_with(&self.rows[v]);
        }
        out
    }

    /// `N(S)`: vertices outside `S` adjacent to some member of `S`.
    pub fn neighborhood_of(&self, s: &VertexSet) -> VertexSet {
        let mut out = self.closed_neighborhood_of(s);
        out.difference_with(s);
        out
    }

    /// `N(e)` for an edge `uv`: vertices other than `u, v` adjacent to either end.
    pub fn edge_neighborhood(&self, u: Vertex, v: Vertex) -> VertexSet {
        let mut s = self.rows[u].union(&self.rows[v]);
        s.remove(u);
        s.remove(v);
        s
    }

    pub fn complement(&self) -> Graph {
        let rows = (0..self.n)
            .map(|v| {
                let mut r = VertexSet::full(self.n);
                r.difference_with(&self.rows[v]);
                r.remove(v);
                r
            })
            .collect();
        Self::from_rows(rows)
    }

    /// Induced subgraph on `V \ x`, relabelled to `0..n'` in increasing order.
    pub fn delete(&self, x: &VertexSet) -> (Graph, Relabel) {
        let keep = self.vertex_set().difference(x);
        self.induced(&keep)
    }

    pub fn induced(&self, keep: &VertexSet) -> (Graph, Relabel) {
        let new_to_old: Vec<Vertex> = keep.iter().collect();
        let mut old_to_new = vec![None; self.n];
        for (i, &v) in new_to_old.iter().enumerate() {
            old_to_new[v] = Some(i);
        }
        let k = new_to_old.len();
        let rows = new_to_old
            .iter()
            .map(|&v| VertexSet::from_vertices(k, self.adj[v].iter().filter_map(|&w| old_to_new[w])))
            .collect();
        (Self::from_rows(rows), Relabel { old_to_new, new_to_old })
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = self.empty_set();
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            let mut comp = self.empty_set();
            let mut stack = vec![s];
            seen.insert(s);
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for &w in &self.adj[v] {
                    if seen.insert(w) {
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Number of edges of `G[s]`.
    pub fn edges_within(&self, s: &VertexSet) -> usize {
        s.iter().map(|v| self.rows[v].intersection_len(s)).sum::<usize>() / 2
    }
}

/// Old/new vertex correspondence produced by [`Graph::delete`] and [`Graph::induced`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabel {
    old_to_new: Vec<Option<Vertex>>,
    new_to_old: Vec<Vertex>,
}

impl Relabel {
    pub fn to_new(&self, old: Vertex) -> Option<Vertex> {
        self.old_to_new.get(old).copied().flatten()
    }

    pub fn to_old(&self, new: Vertex) -> Vertex {
        self.new_to_old[new]
    }

    pub fn len(&self) -> usize {
        self.new_to_old.len()
    }

    pub fn is_empty(&self) -> bool {
        self.new_to_old.is_empty()
    }

    pub fn map_to_old(&self, vs: &[Vertex]) -> Vec<Vertex> {
        vs.iter().map(|&v| self.new_to_old[v]).collect()
    }
}

/// A `uv`-path: distinct vertices, consecutive ones adjacent in the host.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathSeq {
    vertices: Vec<Vertex>,
    host: GraphId,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("empty vertex sequence")]
    Empty,
    #[error("vertex {0} appears twice")]
    Repeated(Vertex),
    #[error("vertex {0} out of range")]
    OutOfRange(Vertex),
    #[error("{0} and {1} are consecutive but not adjacent")]
    MissingEdge(Vertex, Vertex),
}

impl PathSeq {
    pub fn new(g: &Graph, vertices: Vec<Vertex>) -> Result<PathSeq, PathError> {
        if vertices.is_empty() {
            return Err(PathError::Empty);
        }
        let mut seen = g.empty_set();
        for &v in &vertices {
            if v >= g.n() {
                return Err(PathError::OutOfRange(v));
            }
            if !seen.insert(v) {
                return Err(PathError::Repeated(v));
            }
        }
        for w in vertices.windows(2) {
            if !g.adjacent(w[0], w[1]) {
                return Err(PathError::MissingEdge(w[0], w[1]));
            }
        }
        Ok(PathSeq { vertices, host: g.id() })
    }

    /// Caller guarantees the path invariants (used for BFS reconstructions).
    pub(crate) fn trusted(g: &Graph, vertices: Vec<Vertex>) -> PathSeq {
        debug_assert!(PathSeq::new(g, vertices.clone()).is_ok(), "bad path {vertices:?}");
        PathSeq { vertices, host: g.id() }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<Vertex> {
        self.vertices
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn start(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn end(&self) -> Vertex {
        *self.vertices.last().unwrap()
    }

    pub fn host(&self) -> GraphId {
        self.host
    }

    pub fn interior(&self) -> &[Vertex] {
        if self.vertices.len() <= 2 {
            &[]
        } else {
            &self.vertices[1..self.vertices.len() - 1]
        }
    }

    pub fn vertex_set(&self, n: usize) -> VertexSet {
        VertexSet::from_vertices(n, self.vertices.iter().copied())
    }

    pub fn reversed(&self) -> PathSeq {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        PathSeq { vertices, host: self.host }
    }

    /// True when the path has no chords in `g`.
    pub fn is_induced(&self, g: &Graph) -> bool {
        let set = self.vertex_set(g.n());
        g.edges_within(&set) == self.len()
    }
}

/// Induced cycle of length at least four, stored in canonical rotation.
///
/// Equality and ordering look at the vertex sequence only, not the host.
#[derive(Debug, Clone)]
pub struct Hole {
    cycle: Vec<Vertex>,
    host: GraphId,
}

impl PartialEq for Hole {
    fn eq(&self, other: &Self) -> bool {
        self.cycle == other.cycle
    }
}

impl Eq for Hole {}

impl std::hash::Hash for Hole {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.cycle.hash(state);
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HoleError {
    #[error("cycle of length {0} is shorter than four")]
    TooShort(usize),
    #[error("vertex {0} out of range")]
    OutOfRange(Vertex),
    #[error("vertex {0} repeated")]
    Repeated(Vertex),
    #[error("missing edge {0}-{1}")]
    MissingEdge(Vertex, Vertex),
    #[error("chord {0}-{1}")]
    Chord(Vertex, Vertex),
}

impl Hole {
    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.cycle.len() % 2 == 1
    }

    pub fn is_even(&self) -> bool {
        !self.is_odd()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.cycle
    }

    pub fn host(&self) -> GraphId {
        self.host
    }

    pub fn vertex_set(&self, n: usize) -> VertexSet {
        VertexSet::from_vertices(n, self.cycle.iter().copied())
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.cycle.contains(&v)
    }

    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.cycle.iter().position(|&w| w == v)
    }

    /// Edges of the cycle as `(cycle[i], cycle[i+1])`.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let k = self.cycle.len();
        (0..k).map(move |i| (self.cycle[i], self.cycle[(i + 1) % k]))
    }

    /// `d_C(u, v)` for members of the hole.
    pub fn distance(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let (i, j) = (self.position(u)?, self.position(v)?);
        let d = i.abs_diff(j);
        Some(d.min(self.len() - d))
    }

    /// Vertices of the arc from `u` to `v` walking forward along the stored rotation.
    pub fn arc_forward(&self, u: Vertex, v: Vertex) -> Option<Vec<Vertex>> {
        let (i, j) = (self.position(u)?, self.position(v)?);
        let k = self.len();
        let steps = (j + k - i) % k;
        Some((0..=steps).map(|s| self.cycle[(i + s) % k]).collect())
    }

    /// Both `uv`-paths of the hole, shorter first.
    pub fn arcs(&self, u: Vertex, v: Vertex) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
        let a = self.arc_forward(u, v)?;
        let mut b = self.arc_forward(v, u)?;
        b.reverse();
        if a.len() <= b.len() {
            Some((a, b))
        } else {
            Some((b, a))
        }
    }

    /// Maps the hole through a relabelling back into the original graph.
    pub fn lift(&self, relabel: &Relabel, original: &Graph) -> Hole {
        Hole::from_certified(original, relabel.map_to_old(&self.cycle))
    }

    fn canonicalize(mut cycle: Vec<Vertex>) -> Vec<Vertex> {
        let k = cycle.len();
        let (pos, _) = cycle.iter().enumerate().min_by_key(|&(_, &v)| v).unwrap();
        cycle.rotate_left(pos);
        if cycle[k - 1] < cycle[1] {
            cycle[1..].reverse();
        }
        cycle
    }

    pub(crate) fn from_certified(g: &Graph, cycle: Vec<Vertex>) -> Hole {
        debug_assert!(certify_hole(g, &cycle).is_ok(), "not a hole: {cycle:?}");
        Hole { cycle: Self::canonicalize(cycle), host: g.id() }
    }
}

impl PartialOrd for Hole {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Shorter first, then lexicographic on the canonical rotation.
impl Ord for Hole {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cycle.len().cmp(&other.cycle.len()).then_with(|| self.cycle.cmp(&other.cycle))
    }
}

impl fmt::Display for Hole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.cycle.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join("-"))
    }
}

/// Returns the canonical [`Hole`] iff `seq` is an induced cycle of length >= 4.
pub fn certify_hole(g: &Graph, seq: &[Vertex]) -> Result<Hole, HoleError> {
    let k = seq.len();
    for &v in seq {
        if v >= g.n() {
            return Err(HoleError::OutOfRange(v));
        }
    }
    let mut seen = g.empty_set();
    for &v in seq {
        if !seen.insert(v) {
            return Err(HoleError::Repeated(v));
        }
    }
    if k < 4 {
        return Err(HoleError::TooShort(k));
    }
    for i in 0..k {
        let (u, v) = (seq[i], seq[(i + 1) % k]);
        if !g.adjacent(u, v) {
            return Err(HoleError::MissingEdge(u, v));
        }
    }
    if g.edges_within(&seen) != k {
        for i in 0..k {
            for j in i + 2..k {
                if (i == 0 && j == k - 1) || !g.adjacent(seq[i], seq[j]) {
                    continue;
                }
                return Err(HoleError::Chord(seq[i].min(seq[j]), seq[i].max(seq[j])));
            }
        }
    }
    Ok(Hole { cycle: Hole::canonicalize(seq.to_vec()), host: g.id() })
}

/// Anticompleteness in the `N_G[A] ∩ B = ∅` sense: disjoint and no edge between.
pub fn anticomplete(g: &Graph, a: &VertexSet, b: &VertexSet) -> bool {
    g.closed_neighborhood_of(a).is_disjoint(b)
}

/// Orders a connected vertex set inducing a cycle into a cyclic sequence.
/// Returns `None` when `G[s]` is not a single cycle.
pub fn cycle_order(g: &Graph, s: &VertexSet) -> Option<Vec<Vertex>> {
    let k = s.len();
    if k < 3 {
        return None;
    }
    for v in s.iter() {
        if g.row(v).intersection_len(s) != 2 {
            return None;
        }
    }
    let start = s.first()?;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = g.row(cur).intersection(s).iter().find(|&w| w != prev)?;
        if next == start {
            break;
        }
        order.push(next);
        prev = cur;
        cur = next;
    }
    (order.len() == k).then_some(order)
}

/// Orders a vertex set inducing a path from `u` to `v`. `None` if `G[s]` is
/// not such a path.
pub fn path_order(g: &Graph, s: &VertexSet, u: Vertex, v: Vertex) -> Option<Vec<Vertex>> {
    if !s.contains(u) || !s.contains(v) {
        return None;
    }
    let k = s.len();
    if g.edges_within(s) + 1 != k {
        return None;
    }
    let mut order = vec![u];
    let mut prev = usize::MAX;
    let mut cur = u;
    while cur != v {
        let around = g.row(cur).intersection(s);
        let mut nexts = around.iter().filter(|&w| w != prev);
        let next = nexts.next()?;
        if nexts.next().is_some() {
            return None;
        }
        order.push(next);
        prev = cur;
        cur = next;
        if order.len() > k {
            return None;
        }
    }
    (order.len() == k).then_some(order)
}
