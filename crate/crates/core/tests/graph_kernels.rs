mod support;

use algraph::classes::{chromatic_number, clique_number, diameter, matching_number, spread};
use algraph::{classify, complement_graph, induced_subgraph, GraphClass, InvariantValue, Limits, SimpleGraph};
use proptest::prelude::*;
use support::oracle;

fn arb_graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        (Just(n), proptest::collection::vec(any::<bool>(), pairs))
    })
    .prop_map(|(n, bits)| {
        let mut g = SimpleGraph::with_order(n).unwrap();
        let mut k = 0;
        for u in 0..n {
            for v in u + 1..n {
                if bits[k] {
                    g.add_edge(u, v);
                }
                k += 1;
            }
        }
        g
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn classes_agree_with_brute_force(g in arb_graph(9)) {
        let l = Limits::default();
        for class in GraphClass::ALL {
            let w = classify(&g, class, &l).unwrap();
            prop_assert_eq!(w.verdict, oracle::in_class(&g, class), "{}", class);
            prop_assert!(w.witness_is_valid(&g));
            if let Some(c) = &w.certificate {
                prop_assert!(c.certifies(&g));
            }
        }
    }

    #[test]
    fn invariants_agree_with_brute_force(g in arb_graph(10)) {
        let l = Limits::default();
        prop_assert_eq!(clique_number(&g, &l).unwrap(), oracle::clique_number(&g));
        prop_assert_eq!(chromatic_number(&g, &l).unwrap(), oracle::chromatic_number(&g));
        prop_assert_eq!(matching_number(&g, &l).unwrap(), oracle::matching_number(&g));
        let want = match oracle::spread(&g, l.spread_cap) {
            (s, true) => InvariantValue::AtLeast(s),
            (s, false) => InvariantValue::Exact(s),
        };
        prop_assert_eq!(spread(&g, &l).unwrap(), want);
        let want = oracle::diameter(&g).map_or(InvariantValue::Infinite, InvariantValue::Exact);
        prop_assert_eq!(diameter(&g), want);
    }

    #[test]
    fn complement_commutes_with_induced(g in arb_graph(10), mask in any::<u16>()) {
        let s: Vec<usize> = (0..g.order()).filter(|&v| mask >> v & 1 == 1).collect();
        prop_assert_eq!(
            induced_subgraph(&complement_graph(&g), &s).unwrap(),
            complement_graph(&induced_subgraph(&g, &s).unwrap())
        );
        prop_assert_eq!(complement_graph(&complement_graph(&g)), g.clone());
    }

    #[test]
    fn json_round_trip(g in arb_graph(12)) {
        prop_assert_eq!(SimpleGraph::from_json_str(&g.to_json_string()).unwrap(), g.clone());
    }
}
