//! Property tests over randomly generated graphs.

use proptest::prelude::*;

use hoffman::graph::{classify_regularity, parse_graph6, to_graph6, Graph};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[idx] {
                        edges.push((i, j));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(40)) {
        let encoded = to_graph6(&g);
        let decoded = parse_graph6(&encoded).unwrap();
        prop_assert_eq!(&decoded, &g);
        // the encoding itself is reproduced from the decoded graph
        prop_assert_eq!(to_graph6(&decoded), encoded);
    }

    #[test]
    fn complement_involution(g in arb_graph(25)) {
        let comp = g.complement();
        prop_assert_eq!(comp.complement(), g.clone());
        let n = g.n();
        prop_assert_eq!(g.edge_count() + comp.edge_count(), n * (n - 1) / 2);
    }

    #[test]
    fn degree_sum_is_twice_edges(g in arb_graph(30)) {
        let sum: usize = g.degrees().iter().sum();
        prop_assert_eq!(sum, 2 * g.edge_count());
    }

    #[test]
    fn srg_counting_identity(g in arb_graph(12)) {
        // whenever the classifier reports a strongly regular graph, the
        // counting identity holds exactly in integer arithmetic
        if let Some((n, k, a, c)) = classify_regularity(&g).srg_params() {
            prop_assert_eq!(c * (n - k - 1), k * (k - a - 1));
        }
    }
}
