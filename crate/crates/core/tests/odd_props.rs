use proptest::prelude::*;

use holeforge::odd::{
    contains_odd_hole, find_deep_shortest, find_general, find_medium, find_shallow, is_perfect, shortest_odd_hole,
    shortest_odd_hole_report, Provenance,
};
use holeforge::oracle::{oracle_is_perfect, oracle_shortest_odd_hole};
use holeforge::{certify_hole, gen, Graph, Side};

fn sparse() -> impl Strategy<Value = Graph> {
    (15usize..23, 0usize..5, any::<u64>())
        .prop_map(|(n, extra, seed)| gen::sparse_connected(n, extra, &mut gen::rng(seed)))
}

fn long_hole() -> impl Strategy<Value = Graph> {
    (15usize..25, any::<u64>()).prop_map(|(n, seed)| gen::sparse_long_hole(n, &mut gen::rng(seed)))
}

fn small() -> impl Strategy<Value = Graph> {
    (1usize..9, any::<u64>()).prop_map(|(n, seed)| gen::random_connected_small(n, &mut gen::rng(seed)))
}

fn assert_certified(g: &Graph, h: Option<holeforge::Hole>) {
    if let Some(h) = h {
        assert!(h.is_odd());
        certify_hole(g, h.vertices()).unwrap();
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn shortest_matches_oracle_sparse(g in sparse()) {
        prop_assert_eq!(shortest_odd_hole(&g).map(|h| h.len()), oracle_shortest_odd_hole(&g).map(|h| h.len()));
    }

    #[test]
    fn shortest_matches_oracle_long(g in long_hole()) {
        prop_assert_eq!(shortest_odd_hole(&g).map(|h| h.len()), oracle_shortest_odd_hole(&g).map(|h| h.len()));
    }

    #[test]
    fn detectors_emit_certified_odd_holes_no_shorter_than_oracle(g in long_hole()) {
        let best = oracle_shortest_odd_hole(&g).map(|h| h.len());
        for out in [find_shallow(&g), find_medium(&g), find_general(&g)] {
            if let Some(l) = out.len() {
                prop_assert!(best.is_some_and(|b| b <= l));
            }
            assert_certified(&g, out.candidate);
        }
    }

    #[test]
    fn detection_agrees_with_shortest(g in long_hole()) {
        prop_assert_eq!(contains_odd_hole(&g).hole.is_some(), shortest_odd_hole(&g).is_some());
    }

    #[test]
    fn perfection_matches_coloring(g in small()) {
        let r = is_perfect(&g);
        prop_assert_eq!(r.perfect, oracle_is_perfect(&g).perfect);
        if let Some((side, h)) = r.witness {
            let host = if side == Side::Graph { g.clone() } else { g.complement() };
            certify_hole(&host, h.vertices()).unwrap();
        }
    }

    #[test]
    fn relabelling_preserves_length(g in long_hole(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut gen::rng(seed));
        let edges: Vec<_> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        let h = Graph::from_edge_list(g.n(), &edges).unwrap();
        prop_assert_eq!(shortest_odd_hole(&g).map(|x| x.len()), shortest_odd_hole(&h).map(|x| x.len()));
    }
}

#[test]
fn pyramids_are_deep() {
    for (a, b, c) in [(2, 7, 7), (2, 7, 9)] {
        let g = gen::pyramid(a, b, c);
        let want = oracle_shortest_odd_hole(&g).unwrap().len();
        assert_eq!(find_deep_shortest(&g).len(), Some(want));
        assert_eq!(shortest_odd_hole(&g).unwrap().len(), want);
    }
}

#[test]
fn c17_provenance() {
    let r = shortest_odd_hole_report(&gen::cycle(17));
    assert_eq!(r.hole.unwrap().len(), 17);
    assert!(matches!(r.provenance, Some(Provenance::Medium | Provenance::Preprocessing)));
}

#[test]
fn complement_of_c7() {
    let r = is_perfect(&gen::cycle(7).complement());
    assert!(!r.perfect);
    assert_eq!(r.witness.unwrap().0, Side::Complement);
}

#[test]
fn trivially_perfect() {
    for g in [gen::complete(6), gen::complete_bipartite(3, 4), gen::path(9), gen::cycle(8)] {
        assert!(is_perfect(&g).perfect);
    }
    assert!(!is_perfect(&gen::petersen()).perfect);
}
