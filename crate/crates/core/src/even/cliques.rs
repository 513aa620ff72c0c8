//! Maximal cliques by pivoted Bron–Kerbosch.

use crate::graph::{Graph, VertexSet};

/// Every maximal clique, each sorted, in lexicographic order.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let mut r = g.empty_set();
    expand(g, &mut r, g.vertex_set(), g.empty_set(), &mut out);
    out.sort_by_key(VertexSet::to_vec);
    out
}

fn expand(g: &Graph, r: &mut VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    // Pivot with the most neighbours in P.
    let pivot = p.union(&x).iter().max_by_key(|&u| g.row(u).intersection_len(&p)).unwrap();
    let branch = p.difference(g.row(pivot));
    for v in branch.iter() {
        r.insert(v);
        expand(g, r, p.intersection(g.row(v)), x.intersection(g.row(v)), out);
        r.remove(v);
        p.remove(v);
        x.insert(v);
    }
}
