//! Cross-module invariants: theta-number inequalities on random graphs,
//! Hoffman-colorability consequences over the catalog, and exhaustive
//! small-order identities.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use hoffman::coloring::{find_hoffman_coloring, max_clique, HoffmanSearchOutcome};
use hoffman::graph::{catalog, named_graph, Graph};
use hoffman::params::{average_params, hoffman_number};
use hoffman::survey::for_each_regular_graph;
use hoffman::theta::{lovasz_theta, ThetaVariant};

const TOL: f64 = 1e-5;
const BUDGET: u64 = 100_000_000;

fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .filter(|_| rng.random_bool(p))
        .collect();
    Graph::from_edges(n, edges).unwrap()
}

#[test]
fn theta_monotone_under_edge_deletion() {
    let mut rng = StdRng::seed_from_u64(7);
    for trial in 0..10 {
        let n = 6 + trial % 7;
        let g = random_graph(&mut rng, n, 0.5);
        let Some((u, v)) = g.edges().next() else { continue };
        let smaller = Graph::from_edges(
            n,
            g.edges().filter(|&e| e != (u, v)).collect::<Vec<_>>(),
        )
        .unwrap();
        let before = lovasz_theta::<f64>(&g, ThetaVariant::Theta, TOL).unwrap();
        let after = lovasz_theta::<f64>(&smaller, ThetaVariant::Theta, TOL).unwrap();
        assert!(
            after.value >= before.value - 1e-4,
            "removing an edge never decreases theta: {} -> {}",
            before.value,
            after.value
        );
    }
}

#[test]
fn theta_product_and_variant_inequalities() {
    let mut rng = StdRng::seed_from_u64(11);
    let mut graphs: Vec<Graph> = (0..8).map(|i| random_graph(&mut rng, 5 + i, 0.4)).collect();
    graphs.push(named_graph("petersen").unwrap());
    graphs.push(named_graph("cycle(7)").unwrap());
    for g in &graphs {
        let theta = lovasz_theta::<f64>(g, ThetaVariant::Theta, TOL).unwrap();
        let theta_comp =
            lovasz_theta::<f64>(&g.complement(), ThetaVariant::Theta, TOL).unwrap();
        assert!(
            theta.value * theta_comp.value >= g.n() as f64 - 1e-3,
            "theta(G)theta(~G) >= n on {g:?}"
        );
        let prime = lovasz_theta::<f64>(g, ThetaVariant::ThetaPrime, TOL).unwrap();
        assert!(prime.value <= theta.value + 2.0 * TOL, "theta' <= theta on {g:?}");
    }
}

/// Graphs where both the graph and its complement are Hoffman colorable:
/// both directions certify (rook(3) doubles as Paley(9)).
#[test]
fn both_sides_hoffman_colorable() {
    for name in ["rook(3)", "rook(4)"] {
        let g = named_graph(name).unwrap();
        for (side, graph) in [("graph", g.clone()), ("complement", g.complement())] {
            match find_hoffman_coloring(&graph, BUDGET) {
                HoffmanSearchOutcome::Found { .. } => {}
                other => panic!("{name} {side}: expected Hoffman coloring, got {other:?}"),
            }
        }
    }
}

/// For every Hoffman colorable regular graph tested, ω ≤ s̄+1, with
/// equality exactly on strongly regular graphs possessing a Delsarte
/// clique.
#[test]
fn clique_below_s_bar_plus_one() {
    for entry in catalog() {
        let g = &entry.graph;
        let found = matches!(find_hoffman_coloring(g, BUDGET), HoffmanSearchOutcome::Found { .. });
        if !found {
            continue;
        }
        let omega = max_clique(g, BUDGET).exact_size().expect(entry.name);
        let s_plus_1 = average_params(g).expect(entry.name).s_bar.to_f64() + 1.0;
        assert!(omega as f64 <= s_plus_1 + 1e-9, "{}", entry.name);
        let delsarte =
            hoffman::coloring::find_delsarte_clique(g, BUDGET).map(|o| o.is_found());
        let equality = (omega as f64 - s_plus_1).abs() <= 1e-9;
        assert_eq!(
            equality,
            delsarte == Ok(true),
            "{}: equality iff a Delsarte clique exists",
            entry.name
        );
    }
}

/// Exhaustive n ≤ 7: a connected regular graph has a verifying Hoffman
/// coloring exactly when its chromatic number equals its (integral)
/// Hoffman number.
#[test]
fn hoffman_colorable_iff_chi_equals_h() {
    for n in 2..=7usize {
        for k in 1..n.saturating_sub(1) {
            for_each_regular_graph(n, k, true, |g| {
                if g.is_complete() || g.is_empty_graph() {
                    return;
                }
                let h = hoffman_number(g).unwrap();
                let chi = hoffman::coloring::chromatic_number(g, BUDGET)
                    .exact()
                    .expect("small graph");
                let colorable = h.nearest_integer_within(1e-7) == Some(chi as i64);
                let found =
                    matches!(find_hoffman_coloring(g, BUDGET), HoffmanSearchOutcome::Found { .. });
                assert_eq!(found, colorable, "{g:?}");
            });
        }
    }
}

/// The h ≤ s̄+1 campaign and complement-root relations at order 8 run
/// clean (the product campaign is covered by the acceptance suite).
#[test]
fn h_le_sbar_campaign() {
    let result = hoffman::survey::run_campaign(
        hoffman::survey::CheckId::HLeSBar,
        8,
        &hoffman::survey::CampaignOptions::default(),
    )
    .unwrap();
    assert_eq!(result.violations, vec![]);
    assert!(result.scanned > 40_000);
}

/// The equitability campaign: every optimal coloring of every Hoffman
/// colorable connected regular graph on at most 7 vertices is equitable
/// with the right cross-degrees.
#[test]
fn hoffman_equitable_campaign() {
    let result = hoffman::survey::run_campaign(
        hoffman::survey::CheckId::HoffmanEquitable,
        7,
        &hoffman::survey::CampaignOptions::default(),
    )
    .unwrap();
    assert_eq!(result.violations, vec![]);
}

/// Corpus round trip: exporting the six bounded-Hoffman-number graphs and
/// ingesting them back reproduces primitive strongly regular graphs with
/// h ≤ 3.
#[test]
fn corpus_of_the_six_graphs() {
    let graphs = [
        named_graph("cycle(5)").unwrap(),
        named_graph("rook(3)").unwrap(),
        named_graph("petersen").unwrap(),
        named_graph("triangular(6)").unwrap().complement(),
        named_graph("clebsch").unwrap(),
        named_graph("co-schlafli").unwrap(),
    ];
    let mut corpus = String::from(">>graph6<<\n");
    for g in &graphs {
        corpus.push_str(&hoffman::graph::to_graph6(g));
        corpus.push('\n');
    }
    let (parsed, diagnostics) = hoffman::survey::ingest_corpus(corpus.as_bytes()).unwrap();
    assert!(diagnostics.is_empty());
    assert_eq!(parsed.len(), 6);
    for (g, original) in parsed.iter().zip(&graphs) {
        assert_eq!(g, original);
        let class = hoffman::graph::classify_regularity(g);
        assert!(class.is_primitive_srg());
        let h = hoffman_number(g).unwrap().to_f64();
        assert!(h <= 3.0 + 1e-9, "h = {h}");
    }
}
