//! Distance-pattern search for good shortest even holes.
//!
//! A hole of length `8ℓ + 2(r1+r2+r3)` is cut by eight vertices
//! `(a2, b, a3, b3, a, b2, a1, b1)` into arcs of lengths
//! `ℓ, ℓ+r2, ℓ+r3, ℓ+r2, ℓ, ℓ+r1, ℓ+r3, ℓ+r1`. The scan guesses the six
//! vertices `(a1, a2, a3, b1, b2, b3)` and certifies that suitable `a` and `b`
//! exist through the sets `S_r`.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{certify_hole, Graph, Hole, HoleError, PathSeq, Vertex};
use crate::paths::{DistanceMatrix, INF};

/// `(r1, r2, r3) ∈ {0,1}^3` with `r1 >= r2 >= r3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NiceTriple {
    pub r1: u8,
    pub r2: u8,
    pub r3: u8,
}

impl NiceTriple {
    pub const ALL: [NiceTriple; 4] = [
        NiceTriple { r1: 0, r2: 0, r3: 0 },
        NiceTriple { r1: 1, r2: 0, r3: 0 },
        NiceTriple { r1: 1, r2: 1, r3: 0 },
        NiceTriple { r1: 1, r2: 1, r3: 1 },
    ];

    pub fn new(r1: u8, r2: u8, r3: u8) -> Option<NiceTriple> {
        (r1 <= 1 && r1 >= r2 && r2 >= r3).then_some(NiceTriple { r1, r2, r3 })
    }

    pub fn sum(self) -> usize {
        (self.r1 + self.r2 + self.r3) as usize
    }

    /// `8ℓ + 2(r1 + r2 + r3)`.
    pub fn hole_length(self, ell: usize) -> usize {
        8 * ell + 2 * self.sum()
    }

    fn parts(self) -> (u32, u32, u32) {
        (self.r1 as u32, self.r2 as u32, self.r3 as u32)
    }
}

impl fmt::Display for NiceTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.r1, self.r2, self.r3)
    }
}

/// One membership question `a ∈ S_r(a1, ..., a5)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SrQuery {
    pub anchors: [Vertex; 5],
    pub candidate: Vertex,
    pub r: NiceTriple,
}

impl SrQuery {
    pub fn ell(&self, dist: &DistanceMatrix) -> Option<usize> {
        sr_member(dist, self.r, self.anchors, self.candidate)
    }
}

/// The `ℓ` witnessing `a ∈ S_r(a1, ..., a5)`, which can only be `d(a, a4)`.
pub fn sr_member(dist: &DistanceMatrix, r: NiceTriple, anchors: [Vertex; 5], a: Vertex) -> Option<usize> {
    let [a1, a2, a3, a4, a5] = anchors;
    let d = |u: Vertex, v: Vertex| dist.raw(u, v) as u32;
    let l = d(a, a4);
    if l == INF as u32 || l < 2 {
        return None;
    }
    let (r1, r2, r3) = r.parts();
    let ok = d(a1, a2) == 2 * l + r1 + r3
        && d(a2, a3) == 2 * l + r2
        && d(a1, a3) >= 2 * l + r1 + r3
        && d(a, a1) == 2 * l + r1
        && d(a, a2) >= 2 * l + r1 + r3
        && d(a, a3) == 2 * l + r2 + r3
        && d(a, a5) == l + r2
        && d(a1, a4) == l + r1
        && d(a3, a5) == l + r3;
    ok.then_some(l as usize)
}

/// `ℓ` as fixed by the anchors alone (`d(a1,a2) = 2ℓ + r1 + r3`).
fn anchor_ell(dist: &DistanceMatrix, r: NiceTriple, a1: Vertex, a2: Vertex) -> Option<u32> {
    let d = dist.raw(a1, a2);
    let s = (r.r1 + r.r3) as u32;
    if d == INF || (d as u32) < s + 4 || (d as u32 - s) % 2 == 1 {
        return None;
    }
    Some((d as u32 - s) / 2)
}

/// The members of `S_r(a1, ..., a5)`.
pub fn sr_members(dist: &DistanceMatrix, r: NiceTriple, anchors: [Vertex; 5]) -> Vec<Vertex> {
    (0..dist.n()).filter(|&a| sr_member(dist, r, anchors, a).is_some()).collect()
}

/// An `r`-valid six-tuple `(a1, a2, a3, b1, b2, b3)` with its four paths
/// `P(a2,b1)`, `P(b1,a1)`, `P(a1,b2)`, `P(a3,b3)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SixTupleWitness {
    pub tuple: [Vertex; 6],
    pub r: NiceTriple,
    pub ell: usize,
    pub p1: PathSeq,
    pub p2: PathSeq,
    pub p3: PathSeq,
    pub p4: PathSeq,
}

/// Whether `p` followed by `q` (sharing `p`'s last vertex as `q`'s first)
/// induces a path.
fn concat_is_path(g: &Graph, p: &[Vertex], q: &[Vertex]) -> bool {
    if p.last() != q.first() {
        return false;
    }
    let mut seq = p.to_vec();
    seq.extend_from_slice(&q[1..]);
    let set = g.set_of(seq.iter().copied());
    if set.len() != seq.len() {
        return false;
    }
    // Induced: only consecutive pairs adjacent.
    seq.iter().enumerate().all(|(i, &u)| seq.iter().skip(i + 2).all(|&w| !g.adjacent(u, w)))
}

fn anticomplete_paths(g: &Graph, p: &[Vertex], q: &[Vertex]) -> bool {
    p.iter().all(|&u| q.iter().all(|&w| u != w && !g.adjacent(u, w)))
}

/// `r`-validity with `ℓ = d(a1, b1) - r3`.
pub fn r_valid(g: &Graph, dist: &DistanceMatrix, r: NiceTriple, tuple: [Vertex; 6]) -> Option<SixTupleWitness> {
    let [a1, a2, a3, b1, b2, b3] = tuple;
    let d = dist.dist(a1, b1)?;
    let ell = d.checked_sub(r.r3 as usize)?;
    if ell < 2 {
        return None;
    }
    let (r1, r3) = (r.r1 as usize, r.r3 as usize);
    let want = [(a2, b1, ell + r1), (b1, a1, ell + r3), (a1, b2, ell + r1), (a3, b3, ell + r3)];
    if want.iter().any(|&(u, v, l)| dist.dist(u, v) != Some(l)) {
        return None;
    }
    let [p1, p2, p3, p4] = want.map(|(u, v, _)| dist.path(u, v).unwrap());
    let ok = concat_is_path(g, &p1, &p2)
        && concat_is_path(g, &p2, &p3)
        && anticomplete_paths(g, &p1, &p3)
        && [&p1, &p2, &p3].iter().all(|p| anticomplete_paths(g, p, &p4));
    if !ok {
        return None;
    }
    let seq = |v: Vec<Vertex>| PathSeq::new(g, v).expect("shortest paths are paths");
    Some(SixTupleWitness { tuple, r, ell, p1: seq(p1), p2: seq(p2), p3: seq(p3), p4: seq(p4) })
}

/// Outcome of the phase-1 scan: the minimum record with one firing tuple and
/// members `a ∈ S_r(a1,a2,a3,b2,b3)`, `b ∈ S_r(b1,b2,b3,a2,a3)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Phase1Record {
    pub length: usize,
    pub witness: SixTupleWitness,
    pub a: Vertex,
    pub b: Vertex,
}

/// Calls `f(witness, a, b)` for every firing `(r, tuple)`, where `a` and `b`
/// are the least members of the two `S_r` sets.
pub fn for_each_firing(
    g: &Graph,
    dist: &DistanceMatrix,
    a1: Vertex,
    mut f: impl FnMut(SixTupleWitness, Vertex, Vertex),
) {
    let n = g.n();
    let mut memo: HashMap<(NiceTriple, [Vertex; 5]), Option<Vertex>> = HashMap::new();
    let mut first_member = |r: NiceTriple, anchors: [Vertex; 5]| -> Option<Vertex> {
        *memo.entry((r, anchors)).or_insert_with(|| (0..n).find(|&a| sr_member(dist, r, anchors, a).is_some()))
    };
    let raw = |u: Vertex, v: Vertex| dist.raw(u, v) as u32;
    for r in NiceTriple::ALL {
        let (r1, r2, r3) = r.parts();
        for b1 in 0..n {
            let d = raw(a1, b1);
            if d == INF as u32 || d < r3 + 2 {
                continue;
            }
            let l = d - r3;
            for a2 in (0..n).filter(|&a2| raw(a2, b1) == l + r1) {
                let Some(la) = anchor_ell(dist, r, a1, a2) else { continue };
                for b2 in (0..n).filter(|&b2| raw(a1, b2) == l + r1) {
                    let Some(lb) = anchor_ell(dist, r, b1, b2) else { continue };
                    for a3 in (0..n).filter(|&a3| raw(a2, a3) == 2 * la + r2 && raw(a1, a3) >= 2 * la + r1 + r3) {
                        for b3 in (0..n).filter(|&b3| {
                            raw(a3, b3) == l + r3 && raw(b2, b3) == 2 * lb + r2 && raw(b1, b3) >= 2 * lb + r1 + r3
                        }) {
                            let tuple = [a1, a2, a3, b1, b2, b3];
                            let Some(w) = r_valid(g, dist, r, tuple) else { continue };
                            let Some(a) = first_member(r, [a1, a2, a3, b2, b3]) else { continue };
                            let Some(b) = first_member(r, [b1, b2, b3, a2, a3]) else { continue };
                            f(w, a, b);
                        }
                    }
                }
            }
        }
    }
}

/// Minimum `8ℓ + 2(r1+r2+r3)` over firing tuples, ties broken by `(r, tuple)`.
pub fn phase1_scan(g: &Graph) -> Option<Phase1Record> {
    let dist = DistanceMatrix::new(g);
    phase1_scan_with(g, &dist)
}

pub fn phase1_scan_with(g: &Graph, dist: &DistanceMatrix) -> Option<Phase1Record> {
    (0..g.n())
        .into_par_iter()
        .filter_map(|a1| {
            let mut best: Option<Phase1Record> = None;
            for_each_firing(g, dist, a1, |w, a, b| {
                let length = w.r.hole_length(w.ell);
                let better = best
                    .as_ref()
                    .is_none_or(|cur| (length, w.r, w.tuple) < (cur.length, cur.witness.r, cur.witness.tuple));
                if better {
                    best = Some(Phase1Record { length, witness: w, a, b });
                }
            });
            best
        })
        .min_by(|x, y| (x.length, x.witness.r, x.witness.tuple).cmp(&(y.length, y.witness.r, y.witness.tuple)))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EvenHoleError {
    #[error("witness is not r-valid for its tuple")]
    InvalidWitness,
    #[error("{0} is not in the required S_r set")]
    NotInSr(Vertex),
    #[error("no path between {0} and {1}")]
    Disconnected(Vertex, Vertex),
    #[error("consecutive paths {0} and {1} do not form a path")]
    NotAPath(usize, usize),
    #[error("paths {0} and {1} are not anticomplete")]
    NotAnticomplete(usize, usize),
    #[error("union is not a hole: {0}")]
    NotAHole(HoleError),
    #[error("hole has length {got}, expected {expected}")]
    WrongLength { expected: usize, got: usize },
}

/// The even hole through `(a2, b, a3, b3, a, b2, a1, b1)`, with every step of
/// the construction checked.
pub fn construct_even_hole(
    g: &Graph,
    dist: &DistanceMatrix,
    witness: &SixTupleWitness,
    a: Vertex,
    b: Vertex,
) -> Result<Hole, EvenHoleError> {
    let [a1, a2, a3, b1, b2, b3] = witness.tuple;
    let r = witness.r;
    match r_valid(g, dist, r, witness.tuple) {
        Some(w) if w == *witness => {}
        _ => return Err(EvenHoleError::InvalidWitness),
    }
    if sr_member(dist, r, [a1, a2, a3, b2, b3], a).is_none() {
        return Err(EvenHoleError::NotInSr(a));
    }
    if sr_member(dist, r, [b1, b2, b3, a2, a3], b).is_none() {
        return Err(EvenHoleError::NotInSr(b));
    }
    let v = [a2, b, a3, b3, a, b2, a1, b1];
    let mut paths = Vec::with_capacity(8);
    for i in 0..8 {
        let (x, y) = (v[i], v[(i + 1) % 8]);
        paths.push(dist.path(x, y).ok_or(EvenHoleError::Disconnected(x, y))?);
    }
    for i in 0..8 {
        let j = (i + 1) % 8;
        if !concat_is_path(g, &paths[i], &paths[j]) {
            return Err(EvenHoleError::NotAPath(i, j));
        }
    }
    for i in 0..8 {
        for j in i + 2..8 {
            if i == 0 && j == 7 {
                continue;
            }
            if !anticomplete_paths(g, &paths[i], &paths[j]) {
                return Err(EvenHoleError::NotAnticomplete(i, j));
            }
        }
    }
    let mut seq = Vec::new();
    for p in &paths {
        seq.extend_from_slice(&p[..p.len() - 1]);
    }
    let hole = certify_hole(g, &seq).map_err(EvenHoleError::NotAHole)?;
    let expected = r.hole_length(witness.ell);
    if hole.len() != expected {
        return Err(EvenHoleError::WrongLength { expected, got: hole.len() });
    }
    Ok(hole)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    #[test]
    fn nice_triples() {
        assert_eq!(NiceTriple::ALL.iter().filter(|r| NiceTriple::new(r.r1, r.r2, r.r3).is_some()).count(), 4);
        assert!(NiceTriple::new(0, 1, 0).is_none());
        assert_eq!(NiceTriple::ALL[1].to_string(), "100");
    }

    #[test]
    fn sr_on_c24() {
        let g = gen::cycle(24);
        let d = DistanceMatrix::new(&g);
        let r = NiceTriple::ALL[0];
        assert_eq!(sr_member(&d, r, [18, 0, 6, 15, 9], 12), Some(3));
        // a next to a4
        assert_eq!(sr_member(&d, r, [18, 0, 6, 15, 9], 14), None);
    }

    #[test]
    fn r_valid_on_c24() {
        let g = gen::cycle(24);
        let d = DistanceMatrix::new(&g);
        let r = NiceTriple::ALL[0];
        let w = r_valid(&g, &d, r, [18, 0, 6, 21, 15, 9]).unwrap();
        assert_eq!(w.ell, 3);
        assert!(r_valid(&g, &d, r, [18, 0, 6, 22, 15, 9]).is_none());
        let k4 = gen::complete(4);
        let dk = DistanceMatrix::new(&k4);
        assert!(r_valid(&k4, &dk, r, [0, 1, 2, 3, 0, 1]).is_none());
    }

    #[test]
    fn construct_c24() {
        let g = gen::cycle(24);
        let d = DistanceMatrix::new(&g);
        let r = NiceTriple::ALL[0];
        let w = r_valid(&g, &d, r, [18, 0, 6, 21, 15, 9]).unwrap();
        let h = construct_even_hole(&g, &d, &w, 12, 3).unwrap();
        assert_eq!(h.len(), 24);
        let mut tampered = w.clone();
        tampered.ell = 4;
        assert_eq!(construct_even_hole(&g, &d, &tampered, 12, 3), Err(EvenHoleError::InvalidWitness));
    }

    #[test]
    fn scan_cycles() {
        for len in [24, 26, 28, 30, 32] {
            let rec = phase1_scan(&gen::cycle(len)).unwrap();
            assert_eq!(rec.length, len);
        }
        assert!(phase1_scan(&gen::complete(4)).is_none());
    }
}
