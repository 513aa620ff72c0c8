use std::fmt;

use crate::graph::{certify_hole, Graph, Hole, PathSeq, Vertex, VertexSet};

/// Which stage of the shortest-odd-hole pipeline produced a hole.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Provenance {
    /// Exhaustive listing of short odd holes.
    Preprocessing,
    Shallow,
    Medium,
    General,
    Deep,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Preprocessing => "preprocessing",
            Provenance::Shallow => "shallow",
            Provenance::Medium => "medium",
            Provenance::General => "general",
            Provenance::Deep => "deep",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetectorOutcome {
    pub candidate: Option<Hole>,
    pub guarantee_tag: Provenance,
}

impl DetectorOutcome {
    pub fn none(tag: Provenance) -> Self {
        DetectorOutcome { candidate: None, guarantee_tag: tag }
    }

    pub fn len(&self) -> Option<usize> {
        self.candidate.as_ref().map(Hole::len)
    }

    pub fn is_empty(&self) -> bool {
        self.candidate.is_none()
    }
}

/// A vertex set of size at most five with an ordering realising `C[D]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spade {
    pub d: VertexSet,
    /// `C[D]` from `u` to `v`.
    pub ordering: Vec<Vertex>,
    pub u: Vertex,
    pub v: Vertex,
    /// `N[D \ {u,v}] \ {u,v}`.
    pub b: VertexSet,
}

impl Spade {
    pub fn new(g: &Graph, d: VertexSet, ordering: Vec<Vertex>) -> Spade {
        let u = ordering[0];
        let v = *ordering.last().unwrap();
        let b = spade_blocker(g, &d, u, v);
        Spade { d, ordering, u, v, b }
    }
}

/// `B = N[D \ {u,v}] \ {u,v}`.
pub fn spade_blocker(g: &Graph, d: &VertexSet, u: Vertex, v: Vertex) -> VertexSet {
    let mut inner = d.clone();
    inner.remove(u);
    inner.remove(v);
    let mut b = g.closed_neighborhood_of(&inner);
    b.remove(u);
    b.remove(v);
    b
}

/// Three paths from a common apex `a` to the vertices of a base triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tripod {
    pub t1: PathSeq,
    pub t2: PathSeq,
    pub t3: PathSeq,
}

impl Tripod {
    pub fn apex(&self) -> Vertex {
        self.t1.start()
    }

    pub fn base(&self) -> [Vertex; 3] {
        [self.t1.end(), self.t2.end(), self.t3.end()]
    }

    pub fn lengths(&self) -> (usize, usize, usize) {
        (self.t1.len(), self.t2.len(), self.t3.len())
    }

    /// `U(T)`: all vertices of the three paths.
    pub fn tree(&self, n: usize) -> VertexSet {
        let mut s = self.t1.vertex_set(n);
        s.union_with(&self.t2.vertex_set(n));
        s.union_with(&self.t3.vertex_set(n));
        s
    }

    /// Cyclic sequence of `T2 ∪ T3`: apex to `b2`, then back from `b3`.
    pub fn hole_sequence(&self) -> Vec<Vertex> {
        let mut seq = self.t2.vertices().to_vec();
        let t3 = self.t3.vertices();
        seq.extend(t3[1..].iter().rev());
        seq
    }

    /// `C(T)`, when `G[T2 ∪ T3]` is a hole.
    pub fn hole(&self, g: &Graph) -> Option<Hole> {
        certify_hole(g, &self.hole_sequence()).ok()
    }
}

/// `(c0, ..., c4)` placed on a `c0 c4`-path at the spacing an ℓ-marker demands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MarkerTuple {
    pub c: [Vertex; 5],
    pub ell: usize,
}

impl MarkerTuple {
    /// Positions along a path of length `len` for markers of parameter `ell`.
    pub fn positions(len: usize, ell: usize) -> [usize; 5] {
        let mid = len.div_ceil(2);
        let p1 = ell.min(mid);
        let p3 = len - ell.min(len - mid);
        [0, p1, mid, p3, len]
    }

    /// The marker of `path` for parameter `ell`.
    pub fn on_path(path: &[Vertex], ell: usize) -> MarkerTuple {
        let len = path.len() - 1;
        let pos = Self::positions(len, ell);
        MarkerTuple { c: pos.map(|i| path[i]), ell }
    }

    /// Checks the three marker distance equations along `path`.
    pub fn is_marker_of(&self, path: &[Vertex]) -> bool {
        let Some(&first) = path.first() else { return false };
        if first != self.c[0] || *path.last().unwrap() != self.c[4] {
            return false;
        }
        let pos = |v: Vertex| path.iter().position(|&w| w == v);
        let Some(idx) = self.c.iter().map(|&v| pos(v)).collect::<Option<Vec<_>>>() else {
            return false;
        };
        let len = path.len() - 1;
        let d = |i: usize, j: usize| idx[i].abs_diff(idx[j]);
        d(0, 2) == len.div_ceil(2) && d(0, 1) == self.ell.min(d(0, 2)) && d(3, 4) == self.ell.min(d(2, 4))
    }
}
