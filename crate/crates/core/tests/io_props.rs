use proptest::prelude::*;

use holeforge::io::{decode_graph6, encode_dimacs, encode_edgelist, encode_graph6, parse_graph, parse_graphs, Format};
use holeforge::{gen, Graph};

fn any_graph() -> impl Strategy<Value = Graph> {
    (0usize..61, 0.0f64..=1.0, any::<u64>()).prop_map(|(n, p, seed)| gen::gnp(n, p, &mut gen::rng(seed)))
}

fn same(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edges().eq(b.edges())
}

proptest! {
    #[test]
    fn graph6_roundtrip(g in any_graph()) {
        let s = encode_graph6(&g);
        prop_assert!(s.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert!(same(&decode_graph6(&s).unwrap(), &g));
    }

    #[test]
    fn edgelist_and_dimacs_roundtrip(g in any_graph()) {
        prop_assert!(same(&parse_graph(&encode_edgelist(&g), Format::Edgelist).unwrap(), &g));
        prop_assert!(same(&parse_graph(&encode_dimacs(&g), Format::Dimacs).unwrap(), &g));
    }

    #[test]
    fn autodetect(g in any_graph()) {
        prop_assume!(g.n() > 0);
        for text in [encode_edgelist(&g), encode_dimacs(&g), encode_graph6(&g)] {
            prop_assert!(same(&parse_graph(&text, Format::Auto).unwrap(), &g));
        }
    }

    #[test]
    fn garbage_never_panics(s in "\\PC{0,40}") {
        let _ = parse_graphs(&s, Format::Auto);
    }
}
