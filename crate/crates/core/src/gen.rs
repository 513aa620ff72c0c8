//! Deterministic gadgets and seeded random graph families.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Vertex};

fn build(n: usize, edges: &[(Vertex, Vertex)]) -> Graph {
    Graph::from_edges_dedup(n, edges).expect("generator produced an invalid edge")
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn cycle_edges(n: usize) -> Vec<(Vertex, Vertex)> {
    (0..n).map(|i| (i, (i + 1) % n)).collect()
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    build(n, &cycle_edges(n))
}

pub fn path(n: usize) -> Graph {
    let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &e)
}

pub fn complete(n: usize) -> Graph {
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            e.push((u, v));
        }
    }
    build(n, &e)
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut e = Vec::new();
    for u in 0..a {
        for v in 0..b {
            e.push((u, a + v));
        }
    }
    build(a + b, &e)
}

pub fn petersen() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, &e)
}

/// Apex `0` joined to a triangle `b1 b2 b3` by internally disjoint paths of
/// lengths `t1`, `t2`, `t3`.
///
/// The hole through the `t2` and `t3` paths is `0, 1, ..., t2 + t3` in order,
/// so `b2 = t2` and `b3 = t2 + 1`; the `t1` path uses the remaining ids and
/// ends at `b1 = t1 + t2 + t3`.
pub fn pyramid(t1: usize, t2: usize, t3: usize) -> Graph {
    assert!(t1 >= 1 && t2 >= 1 && t3 >= 1);
    let hole = t2 + t3 + 1;
    let n = hole + t1;
    let mut e = cycle_edges(hole);
    let mut prev = 0;
    for v in hole..n {
        e.push((prev, v));
        prev = v;
    }
    let b1 = n - 1;
    e.push((b1, t2));
    e.push((b1, t2 + 1));
    build(n, &e)
}

/// `C15` plus a vertex on four consecutive hole vertices: a ±1 detour over
/// the hole segment `0-1-2-3`.
pub fn spade_gadget() -> Graph {
    attach(&cycle(15), &[&[0, 1, 2, 3]])
}

/// `C15` plus one major vertex whose hole-neighbourhood lies in the
/// neighbourhood of the edge `0-1`.
pub fn medium_gadget() -> Graph {
    attach(&cycle(15), &[&[0, 1, 5, 6, 7]])
}

/// Adds one new vertex per neighbour list.
pub fn attach(g: &Graph, neighbour_lists: &[&[Vertex]]) -> Graph {
    let n = g.n() + neighbour_lists.len();
    let mut e: Vec<_> = g.edges().collect();
    for (i, ns) in neighbour_lists.iter().enumerate() {
        e.extend(ns.iter().map(|&v| (g.n() + i, v)));
    }
    build(n, &e)
}

/// Graph with extra edges added.
pub fn with_edges(g: &Graph, extra: &[(Vertex, Vertex)]) -> Graph {
    let mut e: Vec<_> = g.edges().collect();
    e.extend_from_slice(extra);
    build(g.n(), &e)
}

/// Hangs a path of `len` new vertices off each listed vertex.
pub fn with_pendant_paths(g: &Graph, hangs: &[(Vertex, usize)]) -> Graph {
    let mut e: Vec<_> = g.edges().collect();
    let mut n = g.n();
    for &(v, len) in hangs {
        let mut prev = v;
        for _ in 0..len {
            e.push((prev, n));
            prev = n;
            n += 1;
        }
    }
    build(n, &e)
}

/// Disjoint union of two graphs joined by a path with `bridge` edges from
/// vertex `0` of `a` to vertex `0` of `b`.
pub fn bridged(a: &Graph, b: &Graph, bridge: usize) -> Graph {
    assert!(bridge >= 1);
    let mut e: Vec<_> = a.edges().collect();
    let off = a.n();
    e.extend(b.edges().map(|(u, v)| (u + off, v + off)));
    let mut n = a.n() + b.n();
    let mut prev = 0;
    for _ in 0..bridge - 1 {
        e.push((prev, n));
        prev = n;
        n += 1;
    }
    e.push((prev, off));
    build(n, &e)
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                e.push((u, v));
            }
        }
    }
    build(n, &e)
}

/// Random spanning tree plus `extra` random non-tree edges; connected,
/// `m <= n - 1 + extra`.
pub fn sparse_connected(n: usize, extra: usize, rng: &mut impl Rng) -> Graph {
    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(rng);
    let mut e = Vec::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        e.push((order[i], order[j]));
    }
    let mut g = build(n, &e);
    let mut tries = 0;
    let mut added = 0;
    while added < extra && tries < 100 * (extra + 1) {
        tries += 1;
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v && !g.adjacent(u, v) {
            g = with_edges(&g, &[(u, v)]);
            added += 1;
        }
    }
    g
}

/// Long cycle with a few random chords-through-paths; tends to have long
/// holes and few short ones.
pub fn sparse_long_hole(n: usize, rng: &mut impl Rng) -> Graph {
    let base = rng.gen_range(n / 2..=n).max(3);
    let mut e = cycle_edges(base);
    let mut next = base;
    while next < n {
        let u = rng.gen_range(0..base);
        let len = rng.gen_range(1..=(n - next).min(4));
        let mut prev = u;
        for _ in 0..len {
            e.push((prev, next));
            prev = next;
            next += 1;
        }
        if rng.gen_bool(0.7) {
            let v = rng.gen_range(0..base);
            if v != prev {
                e.push((prev, v));
            }
        }
    }
    build(n, &e)
}

/// Connected graph with `n` vertices drawn by first choosing a random edge
/// count, then random edges over a random spanning tree.
pub fn random_connected_small(n: usize, rng: &mut impl Rng) -> Graph {
    let max_extra = n * (n - 1) / 2 - (n - 1);
    let extra = if max_extra == 0 { 0 } else { rng.gen_range(0..=max_extra) };
    sparse_connected(n, extra, rng)
}

/// `C_len` plus major vertices, one per neighbour list, optionally joined to
/// each other.
pub fn planted_majors(len: usize, majors: &[Vec<Vertex>], major_edges: &[(usize, usize)]) -> Graph {
    let lists: Vec<&[Vertex]> = majors.iter().map(Vec::as_slice).collect();
    let g = attach(&cycle(len), &lists);
    let extra: Vec<_> = major_edges.iter().map(|&(i, j)| (len + i, len + j)).collect();
    with_edges(&g, &extra)
}

/// Random neighbour set on `C_len` whose gaps (steps between consecutive
/// neighbours) are all odd and at least three.
pub fn odd_gap_neighbours(len: usize, rng: &mut impl Rng) -> Vec<Vertex> {
    loop {
        let start = rng.gen_range(0..len);
        let mut pos = 0;
        let mut out = vec![start];
        loop {
            let step = 2 * rng.gen_range(1..=4) + 1;
            if pos + step >= len {
                break;
            }
            pos += step;
            out.push((start + pos) % len);
        }
        let last_gap = len - pos;
        if out.len() >= 3 && last_gap % 2 == 1 && last_gap >= 3 {
            out.sort_unstable();
            return out;
        }
    }
}

/// The fixed gadget list: odd cycles `C15`–`C21`, four pyramids, spade
/// gadgets and medium gadgets with planted majors. All have at most 24
/// vertices.
pub fn named_gadgets() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for len in 15..=21 {
        out.push((format!("cycle-{len}"), cycle(len)));
    }
    for (a, b, c) in [(1, 7, 7), (2, 7, 7), (2, 7, 9), (3, 8, 9)] {
        out.push((format!("pyramid-{a}-{b}-{c}"), pyramid(a, b, c)));
    }
    out.push(("spade".into(), spade_gadget()));
    out.push(("spade-17".into(), attach(&cycle(17), &[&[0, 1, 2, 3]])));
    out.push(("medium".into(), medium_gadget()));
    out.push(("medium-17".into(), planted_majors(17, &[vec![0, 1, 5, 6, 7], vec![1, 2, 9, 10, 11]], &[])));
    out.push(("medium-adjacent".into(), planted_majors(15, &[vec![0, 1, 5, 6, 7], vec![0, 1, 9, 10, 11]], &[(0, 1)])));
    out
}
