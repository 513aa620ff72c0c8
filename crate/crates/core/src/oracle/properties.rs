//! Direct, definition-by-definition certifiers for hole properties.

use thiserror::Error;

use crate::graph::{certify_hole, path_order, Graph, Hole, HoleError, PathSeq, Vertex, VertexSet};
use crate::odd::types::{spade_blocker, Spade, Tripod};
use crate::oracle::holes::{enumerate_holes, oracle_shortest_even_hole, oracle_shortest_odd_hole};
use crate::paths::distances_avoiding;
use crate::paths::INF;

/// Major-vertex sets of a hole.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MajorReport {
    pub hole: Hole,
    /// `M_G(C)`: neighbourhood on `C` not inside any 2-path of `C`.
    pub major: VertexSet,
    /// `M*_G(C)`: members of `M` with at least four neighbours on `C`.
    pub big_major: VertexSet,
    /// `J_G(C)`: three or more pairwise non-adjacent neighbours on `C`.
    pub clear_major: VertexSet,
}

/// Neighbours of `x` on the hole, as positions along the stored rotation.
fn positions_on(g: &Graph, c: &Hole, x: Vertex) -> Vec<usize> {
    c.vertices().iter().enumerate().filter(|&(_, &v)| g.adjacent(x, v)).map(|(i, _)| i).collect()
}

fn inside_some_two_path(pos: &[usize], k: usize) -> bool {
    if pos.len() > 3 {
        return false;
    }
    (0..k).any(|mid| pos.iter().all(|&p| p == mid || p == (mid + 1) % k || p == (mid + k - 1) % k))
}

fn has_stable_triple(g: &Graph, vs: &[Vertex]) -> bool {
    let k = vs.len();
    for i in 0..k {
        for j in i + 1..k {
            if g.adjacent(vs[i], vs[j]) {
                continue;
            }
            for l in j + 1..k {
                if !g.adjacent(vs[i], vs[l]) && !g.adjacent(vs[j], vs[l]) {
                    return true;
                }
            }
        }
    }
    false
}

pub fn major_report(g: &Graph, c: &Hole) -> Result<MajorReport, HoleError> {
    let c = certify_hole(g, c.vertices())?;
    let k = c.len();
    let on = c.vertex_set(g.n());
    let mut major = g.empty_set();
    let mut big = g.empty_set();
    let mut clear = g.empty_set();
    for x in 0..g.n() {
        if on.contains(x) {
            continue;
        }
        let pos = positions_on(g, &c, x);
        if !inside_some_two_path(&pos, k) {
            major.insert(x);
            if pos.len() >= 4 {
                big.insert(x);
            }
        }
        let nbrs: Vec<Vertex> = pos.iter().map(|&p| c.vertices()[p]).collect();
        if has_stable_triple(g, &nbrs) {
            clear.insert(x);
        }
    }
    Ok(MajorReport { hole: c, major, big_major: big, clear_major: clear })
}

/// Lengths of all induced `uv`-paths of `G[d]`.
pub fn induced_path_lengths(g: &Graph, d: &VertexSet, u: Vertex, v: Vertex) -> Vec<usize> {
    fn walk(g: &Graph, d: &VertexSet, path: &mut Vec<Vertex>, v: Vertex, out: &mut Vec<usize>) {
        let last = *path.last().unwrap();
        if last == v {
            out.push(path.len() - 1);
            return;
        }
        for w in g.row(last).intersection(d).iter() {
            if path.contains(&w) {
                continue;
            }
            // induced: w may touch only `last` among earlier vertices
            if path[..path.len() - 1].iter().any(|&p| g.adjacent(p, w)) {
                continue;
            }
            path.push(w);
            walk(g, d, path, v, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    if d.contains(u) && d.contains(v) && u != v {
        walk(g, d, &mut vec![u], v, &mut out);
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// `C[D]` as an ordered path, when `D ∩ V(C)` induces a path of the hole.
fn hole_restriction_path(g: &Graph, c: &Hole, d: &VertexSet) -> Option<Vec<Vertex>> {
    let on = c.vertex_set(g.n()).intersection(d);
    let k = on.len();
    if k < 2 || k >= c.len() {
        return None;
    }
    // Ends are the members with exactly one hole-neighbour inside `on`.
    let ends: Vec<Vertex> = on.iter().filter(|&w| g.row(w).intersection_len(&on) == 1).collect();
    if ends.len() != 2 {
        return None;
    }
    path_order(g, &on, ends[0].min(ends[1]), ends[0].max(ends[1]))
}

/// The three spade conditions, checked literally.
pub fn certify_spade(g: &Graph, c: &Hole, d: &VertexSet) -> bool {
    if d.len() > 5 || certify_hole(g, c.vertices()).is_err() {
        return false;
    }
    let Some(cd) = hole_restriction_path(g, c, d) else { return false };
    let (u, v) = (cd[0], *cd.last().unwrap());
    let len = cd.len() - 1;
    let lengths = induced_path_lengths(g, d, u, v);
    if !lengths.iter().any(|&l| l == len + 1 || l + 1 == len) {
        return false;
    }
    let b = spade_blocker(g, d, u, v);
    let rest = c.vertex_set(g.n()).difference(&b);
    let Some(order) = path_order(g, &rest, u, v) else { return false };
    let dist = distances_avoiding(g, u, &b);
    dist[v] != INF && dist[v] as usize == order.len() - 1
}

/// Every spade for `c`, each reported with its `C[D]` ordering.
pub fn spades_for(g: &Graph, c: &Hole) -> Vec<Spade> {
    let k = c.len();
    let on = c.vertex_set(g.n());
    let outside: Vec<Vertex> = (0..g.n()).filter(|&v| !on.contains(v)).collect();
    let mut out = Vec::new();
    for start in 0..k {
        for arc_len in 2..=5usize.min(k - 1) {
            let arc: Vec<Vertex> = (0..arc_len).map(|i| c.vertices()[(start + i) % k]).collect();
            let extra_max = 5 - arc_len;
            for_each_subset(&outside, extra_max, |extra| {
                let d = VertexSet::from_vertices(g.n(), arc.iter().chain(extra).copied());
                if certify_spade(g, c, &d) {
                    let order = hole_restriction_path(g, c, &d).unwrap();
                    out.push(Spade::new(g, d, order));
                }
            });
        }
    }
    out.sort_by_key(|a| a.d.to_vec());
    out.dedup_by(|a, b| a.d == b.d);
    out
}

pub fn has_spade(g: &Graph, c: &Hole) -> bool {
    !spades_for(g, c).is_empty()
}

/// Calls `f` on every subset of `items` of size at most `max`.
pub fn for_each_subset<T: Copy>(items: &[T], max: usize, mut f: impl FnMut(&[T])) {
    fn rec<T: Copy>(items: &[T], from: usize, max: usize, cur: &mut Vec<T>, f: &mut impl FnMut(&[T])) {
        f(cur);
        if cur.len() == max {
            return;
        }
        for i in from..items.len() {
            cur.push(items[i]);
            rec(items, i + 1, max, cur, f);
            cur.pop();
        }
    }
    rec(items, 0, max, &mut Vec::new(), &mut f);
}

/// Stable subsets of `s` with at most `max` members (the empty set included).
pub fn stable_subsets(g: &Graph, s: &VertexSet, max: usize) -> Vec<VertexSet> {
    let items = s.to_vec();
    let mut out = Vec::new();
    for_each_subset(&items, max, |sub| {
        let stable = sub.iter().enumerate().all(|(i, &a)| sub[i + 1..].iter().all(|&b| !g.adjacent(a, b)));
        if stable {
            out.push(VertexSet::from_vertices(g.n(), sub.iter().copied()));
        }
    });
    out
}

/// Whether `c` is a shortest odd hole whose major vertices lie in `N(e)` for
/// an edge `e` of `c`.
pub fn certify_medium(g: &Graph, c: &Hole) -> bool {
    let Ok(report) = major_report(g, c) else { return false };
    if !c.is_odd() || oracle_shortest_odd_hole(g).map(|h| h.len()) != Some(c.len()) {
        return false;
    }
    c.edges().any(|(a, b)| report.major.is_subset(&g.edge_neighborhood(a, b)))
}

fn shortest_odd_len(g: &Graph) -> Option<usize> {
    oracle_shortest_odd_hole(g).map(|h| h.len())
}

/// All shortest odd holes.
pub fn shortest_odd_holes(g: &Graph) -> Vec<Hole> {
    match shortest_odd_len(g) {
        None => Vec::new(),
        Some(l) => enumerate_holes(g, Some(l)).holes.into_iter().filter(|h| h.len() == l).collect(),
    }
}

/// Conditions Z1–Z4 plus the length ordering; global minimality of `‖T1‖`
/// is not a local property and is not checked here.
pub fn certify_tripod(g: &Graph, t: &Tripod) -> bool {
    let a = t.apex();
    if t.t2.start() != a || t.t3.start() != a {
        return false;
    }
    if [t.t1.host(), t.t2.host(), t.t3.host()].iter().any(|&h| h != g.id()) {
        return false;
    }
    let (l1, l2, l3) = t.lengths();
    if !(1 <= l1 && l1 < l2 && l2 <= l3) {
        return false;
    }
    let [b1, b2, b3] = t.base();
    // Z1
    if !(g.adjacent(b1, b2) && g.adjacent(b2, b3) && g.adjacent(b1, b3)) {
        return false;
    }
    // Z2/Z3: internally disjoint, and G[U] minus the base edges is exactly the
    // union of the three paths.
    let u = t.tree(g.n());
    if u.len() != 1 + l1 + l2 + l3 {
        return false;
    }
    if g.edges_within(&u) != l1 + l2 + l3 + 3 {
        return false;
    }
    // Z4
    match t.hole(g) {
        Some(h) => h.is_odd() && shortest_odd_len(g) == Some(h.len()),
        None => false,
    }
}

/// A tripod with globally minimum `‖T1‖`, by exhaustive search over shortest
/// odd holes. Ties are broken by the vertex sequences.
pub fn find_any_tripod(g: &Graph) -> Option<Tripod> {
    let n = g.n();
    let mut best: Option<(usize, Vec<Vertex>, Vec<Vertex>, Vec<Vertex>)> = None;
    for c in shortest_odd_holes(g) {
        let on = c.vertex_set(n);
        let k = c.len();
        for i in 0..k {
            let (p, q) = (c.vertices()[i], c.vertices()[(i + 1) % k]);
            for b1 in g.row(p).intersection(g.row(q)).iter() {
                if on.contains(b1) {
                    continue;
                }
                let touch = g.row(b1).intersection(&on);
                if touch.len() > 3 {
                    continue;
                }
                for a in c.vertices().iter().copied() {
                    if a == p || a == q {
                        continue;
                    }
                    if touch.len() == 3 && !touch.contains(a) {
                        continue;
                    }
                    let (arc_p, arc_q) = arcs_avoiding(&c, a, p, q);
                    let (b2, b3, t2, t3) =
                        if arc_p.len() <= arc_q.len() { (p, q, arc_p, arc_q) } else { (q, p, arc_q, arc_p) };
                    let _ = (b2, b3);
                    let mut c_minus_a = on.clone();
                    c_minus_a.remove(a);
                    let mut banned = g.closed_neighborhood_of(&c_minus_a);
                    banned.remove(b1);
                    banned.remove(a);
                    let dist = distances_avoiding(g, a, &banned);
                    if dist[b1] == INF {
                        continue;
                    }
                    let l1 = dist[b1] as usize;
                    if !(l1 < t2.len() - 1 && t2.len() <= t3.len()) {
                        continue;
                    }
                    let t1 = crate::paths::canonical_path(g, &banned, a, b1).unwrap();
                    let cand = (l1, t1, t2, t3);
                    if best.as_ref().is_none_or(|b| cand < *b) {
                        best = Some(cand);
                    }
                }
            }
        }
    }
    best.map(|(_, t1, t2, t3)| Tripod {
        t1: PathSeq::new(g, t1).unwrap(),
        t2: PathSeq::new(g, t2).unwrap(),
        t3: PathSeq::new(g, t3).unwrap(),
    })
}

/// The two arcs from `a` to `p` and to `q` that avoid the edge `pq`.
fn arcs_avoiding(c: &Hole, a: Vertex, p: Vertex, q: Vertex) -> (Vec<Vertex>, Vec<Vertex>) {
    let fwd = c.arc_forward(a, p).unwrap();
    let to_p = if fwd.contains(&q) {
        let mut back = c.arc_forward(p, a).unwrap();
        back.reverse();
        back
    } else {
        fwd
    };
    let fwd = c.arc_forward(a, q).unwrap();
    let to_q = if fwd.contains(&p) {
        let mut back = c.arc_forward(q, a).unwrap();
        back.reverse();
        back
    } else {
        fwd
    };
    (to_p, to_q)
}

/// Number of edges of `c` whose ends are both adjacent to every member of `x`.
pub fn x_complete_edge_count(g: &Graph, c: &Hole, x: &VertexSet) -> usize {
    c.edges().filter(|&(u, v)| x.iter().all(|w| g.adjacent(w, u) && g.adjacent(w, v))).count()
}

/// All `x`-gaps: paths `P` of `c` such that `G[P ∪ {x}]` is a hole.
pub fn x_gaps(g: &Graph, c: &Hole, x: Vertex) -> Vec<Vec<Vertex>> {
    let pos = positions_on(g, c, x);
    let k = c.len();
    let mut out = Vec::new();
    if pos.len() < 2 || c.contains(x) {
        return out;
    }
    for (i, &p) in pos.iter().enumerate() {
        let q = pos[(i + 1) % pos.len()];
        let steps = (q + k - p) % k;
        if steps >= 2 {
            out.push((0..=steps).map(|s| c.vertices()[(p + s) % k]).collect());
        }
    }
    out
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BadPathError {
    #[error("not a hole: {0}")]
    NotAHole(#[from] HoleError),
    #[error("hole of length {0} is not a shortest even hole (shortest is {1:?})")]
    NotShortestEven(usize, Option<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BadPath {
    pub path: Vec<Vertex>,
    pub hole_distance: usize,
    pub worst: bool,
    pub flat: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BadPathReport {
    pub paths: Vec<BadPath>,
    /// No C-bad path exists.
    pub good: bool,
    /// Every C-worst path is C-flat.
    pub flat: bool,
}

/// Classifies every C-bad path of `g` for a shortest even hole `c`.
pub fn certify_bad_paths(g: &Graph, c: &Hole) -> Result<BadPathReport, BadPathError> {
    let c = certify_hole(g, c.vertices())?;
    let shortest = oracle_shortest_even_hole(g).map(|h| h.len());
    if !c.is_even() || shortest != Some(c.len()) {
        return Err(BadPathError::NotShortestEven(c.len(), shortest));
    }
    let len_c = c.len();
    let closes_shortest_even = |arc: &[Vertex], path: &[Vertex]| {
        let mut seq = arc.to_vec();
        seq.extend(path[1..path.len() - 1].iter().rev());
        matches!(certify_hole(g, &seq), Ok(h) if h.len() == len_c)
    };
    let mut raw: Vec<(Vec<Vertex>, usize)> = Vec::new();
    let verts = c.vertices().to_vec();
    for (i, &u) in verts.iter().enumerate() {
        for &v in &verts[i + 1..] {
            if g.adjacent(u, v) {
                continue;
            }
            let d = c.distance(u, v).unwrap();
            let max_len = d.min((len_c - 1) / 4);
            if max_len < 2 {
                continue;
            }
            let (c1, c2) = c.arcs(u, v).unwrap();
            for_each_simple_path(g, u, v, max_len, |p| {
                if p.len() > 2 && !closes_shortest_even(&c1, p) && !closes_shortest_even(&c2, p) {
                    raw.push((p.to_vec(), d));
                }
            });
        }
    }
    let min_len = raw.iter().map(|(p, _)| p.len() - 1).min();
    let max_d_at_min = raw.iter().filter(|(p, _)| Some(p.len() - 1) == min_len).map(|&(_, d)| d).max();
    let paths: Vec<BadPath> = raw
        .into_iter()
        .map(|(path, d)| {
            let l = path.len() - 1;
            let worst = Some(l) == min_len && Some(d) == max_d_at_min;
            let flat = l + 1 >= d && {
                let (u, v) = (path[0], *path.last().unwrap());
                let (c1, c2) = c.arcs(u, v).unwrap();
                let hole_with = |arc: &[Vertex]| {
                    let mut seq = arc.to_vec();
                    seq.extend(path[1..path.len() - 1].iter().rev());
                    certify_hole(g, &seq).is_ok()
                };
                hole_with(&c2) || (c1.len() == c2.len() && hole_with(&c1))
            };
            BadPath { path, hole_distance: d, worst, flat }
        })
        .collect();
    let good = paths.is_empty();
    let flat = paths.iter().filter(|p| p.worst).all(|p| p.flat);
    Ok(BadPathReport { paths, good, flat })
}

/// Every simple (not necessarily induced) `uv`-path with at most `max_len` edges.
fn for_each_simple_path(g: &Graph, u: Vertex, v: Vertex, max_len: usize, mut f: impl FnMut(&[Vertex])) {
    fn rec(g: &Graph, v: Vertex, max_len: usize, path: &mut Vec<Vertex>, f: &mut impl FnMut(&[Vertex])) {
        let last = *path.last().unwrap();
        if last == v {
            f(path);
            return;
        }
        if path.len() > max_len {
            return;
        }
        for &w in g.neighbors(last) {
            if !path.contains(&w) {
                path.push(w);
                rec(g, v, max_len, path, f);
                path.pop();
            }
        }
    }
    rec(g, v, max_len, &mut vec![u], &mut f);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    fn hole_of(g: &Graph, seq: &[Vertex]) -> Hole {
        certify_hole(g, seq).unwrap()
    }

    /// C9 on v1..v9 (ids 0..8) with two major vertices x, y.
    fn two_major_example() -> (Graph, Hole) {
        let mut e: Vec<_> = (0..9).map(|i| (i, (i + 1) % 9)).collect();
        for &v in &[1, 2, 6, 7, 8] {
            e.push((9, v - 1));
        }
        for &v in &[3, 4, 6, 7, 8] {
            e.push((10, v - 1));
        }
        let g = Graph::from_edge_list(11, &e).unwrap();
        let c = hole_of(&g, &(0..9).collect::<Vec<_>>());
        (g, c)
    }

    #[test]
    fn major_report_two_major_example() {
        let (g, c) = two_major_example();
        let r = major_report(&g, &c).unwrap();
        assert_eq!(r.major.to_vec(), vec![9, 10]);
        assert_eq!(r.big_major.to_vec(), vec![9, 10]);
    }

    #[test]
    fn complete_edge_counts() {
        let (g, c) = two_major_example();
        assert_eq!(x_complete_edge_count(&g, &c, &g.set_of([9])), 3);
        assert_eq!(x_complete_edge_count(&g, &c, &g.set_of([9, 10])), 2);
        assert_eq!(x_complete_edge_count(&g, &c, &g.empty_set()), 9);
    }

    #[test]
    fn clear_major_apex() {
        let mut e: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        e.extend([(6, 0), (6, 2), (6, 4)]);
        let g = Graph::from_edge_list(7, &e).unwrap();
        let r = major_report(&g, &hole_of(&g, &[0, 1, 2, 3, 4, 5])).unwrap();
        assert!(r.clear_major.contains(6));
    }

    #[test]
    fn two_path_neighbourhood_is_not_major() {
        let mut e: Vec<_> = (0..9).map(|i| (i, (i + 1) % 9)).collect();
        e.extend([(9, 0), (9, 1)]);
        let g = Graph::from_edge_list(10, &e).unwrap();
        let r = major_report(&g, &hole_of(&g, &(0..9).collect::<Vec<_>>())).unwrap();
        assert!(r.major.is_empty());
    }

    #[test]
    fn pure_cycle_has_no_spade() {
        let g = gen::cycle(15);
        let c = hole_of(&g, &(0..15).collect::<Vec<_>>());
        assert!(spades_for(&g, &c).is_empty());
        assert!(!certify_spade(&g, &c, &g.set_of([0, 2])));
    }

    #[test]
    fn spade_gadget_has_spade() {
        let g = gen::spade_gadget();
        let c = hole_of(&g, &(0..15).collect::<Vec<_>>());
        assert!(certify_spade(&g, &c, &g.set_of([0, 1, 2, 3, 15])));
    }

    #[test]
    fn medium_and_tripod() {
        let g = gen::cycle(15);
        assert!(certify_medium(&g, &hole_of(&g, &(0..15).collect::<Vec<_>>())));
        let p = gen::pyramid(2, 7, 7);
        let t = find_any_tripod(&p).unwrap();
        assert!(certify_tripod(&p, &t));
        assert_eq!(t.lengths(), (2, 7, 7));
        assert_eq!(t.hole(&p).unwrap().len(), 15);
    }

    #[test]
    fn tripod_needs_triangle_base() {
        let p = gen::pyramid(2, 7, 7);
        let t = find_any_tripod(&p).unwrap();
        // Swapping T1 for an arc of the hole breaks the base triangle.
        let bogus = Tripod { t1: t.t2.clone(), t2: t.t2.clone(), t3: t.t3.clone() };
        assert!(!certify_tripod(&p, &bogus));
    }

    #[test]
    fn pure_c24_is_good() {
        let g = gen::cycle(24);
        let r = certify_bad_paths(&g, &hole_of(&g, &(0..24).collect::<Vec<_>>())).unwrap();
        assert!(r.good && r.flat);
    }

    #[test]
    fn bad_path_on_non_shortest_hole_is_an_error() {
        let mut e: Vec<_> = (0..24).map(|i| (i, (i + 1) % 24)).collect();
        e.extend((24..28).map(|i| (i, i + 1)));
        e.extend([(0, 24), (28, 4)]);
        let g = Graph::from_edge_list(29, &e).unwrap();
        let c = hole_of(&g, &(0..24).collect::<Vec<_>>());
        assert!(matches!(certify_bad_paths(&g, &c), Err(BadPathError::NotShortestEven(24, Some(10)))));
    }

    #[test]
    fn x_gaps_even_on_shortest_odd_hole() {
        let (g, c) = two_major_example();
        for x in [9, 10] {
            for gap in x_gaps(&g, &c, x) {
                assert!(gap.len() >= 3);
            }
        }
    }
}
