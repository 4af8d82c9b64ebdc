//! Acceptance suite: one test per criterion, each printing a PASS line
//! (run with `--nocapture` to see them). Every tolerance is pinned here.

use std::time::Instant;

use hoffman::coloring::{
    chromatic_number, find_hoffman_coloring, find_spread, verify_hoffman_coloring,
    ChromaticOutcome, HoffmanSearchOutcome, SpreadOutcome,
};
use hoffman::exact::QuadraticNumber;
use hoffman::graph::{catalog, classify_regularity, named_graph, RegularityKind};
use hoffman::params::{
    average_params, complement_geometric, geometric_params_of, hoffman_number,
    s_bar_from_edge_data, srg_param_search,
};
use hoffman::survey::{run_campaign, CampaignOptions, CheckId};
use hoffman::theta::{lovasz_theta, sandwich_report, ThetaVariant};
use hoffman::vector::{
    canonical_vector_coloring, check_vector_coloring, non_uvc_witness, simplex_vectors,
};

const BUDGET: u64 = 100_000_000;

fn pass(criterion: usize, name: &str, detail: String) {
    println!("ACCEPTANCE {criterion} ({name}): PASS  [{detail}]");
}

/// Criterion 1: the bounded parameter search reproduces the known list of
/// primitive strongly regular parameter sets with Hoffman number at most 3,
/// with exact geometric parameters, in under ten seconds.
#[test]
fn criterion_1_h_at_most_3_search() {
    let start = Instant::now();
    let found = srg_param_search(30, 3.0).expect("search in range");
    let elapsed = start.elapsed();

    let tuples: Vec<_> = found.iter().map(|c| (c.n, c.k, c.a, c.c)).collect();
    assert_eq!(
        tuples,
        vec![
            (5, 2, 0, 1),    // pentagon
            (9, 4, 1, 2),    // L(K_{3,3})
            (10, 3, 0, 1),   // Petersen
            (15, 6, 1, 3),   // complement of L(K6)
            (16, 5, 0, 2),   // complement of the Clebsch graph
            (27, 10, 1, 5),  // complement of the Schläfli graph
        ],
        "exactly the six parameter sets"
    );

    let qn = |p, q, r, d| QuadraticNumber::new(p, q, r, d).unwrap();
    let int = QuadraticNumber::from_int;
    let expected_geo = [
        (qn(-1, 1, 1, 5), qn(-1, 1, 2, 5), qn(-1, 1, 2, 5)), // (√5-1, (√5-1)/2, (√5-1)/2)
        (int(2), int(1), int(1)),
        (qn(3, 0, 2, 0), int(1), qn(1, 0, 2, 0)),
        (int(2), int(2), int(1)),
        (qn(5, 0, 3, 0), int(2), qn(2, 0, 3, 0)),
        (int(2), int(4), int(1)),
    ];
    for (cand, (s, t, alpha)) in found.iter().zip(expected_geo) {
        assert_eq!(cand.geometric.s, s, "s of {:?}", (cand.n, cand.k, cand.a, cand.c));
        assert_eq!(cand.geometric.t, t, "t of {:?}", (cand.n, cand.k, cand.a, cand.c));
        assert_eq!(cand.geometric.alpha, alpha, "alpha of {:?}", (cand.n, cand.k, cand.a, cand.c));
    }
    assert!(elapsed.as_secs() < 10, "runtime {elapsed:?} under 10 s");
    pass(1, "h <= 3 search", format!("6 parameter sets in {elapsed:?}"));
}

/// Criterion 2: over every connected regular non-complete non-empty graph
/// with at most 8 vertices, h(G)h(Ḡ) ≤ n with slack ≥ -1e-7, and the
/// equality cases are exactly the strongly regular graphs.
#[test]
fn criterion_2_product_characterization() {
    let start = Instant::now();
    let result = run_campaign(CheckId::Product, 8, &CampaignOptions::default())
        .expect("campaign in range");
    let elapsed = start.elapsed();
    assert_eq!(result.violations, vec![], "no violations");
    assert!(result.scanned > 40_000, "exhaustive scan visited {} graphs", result.scanned);
    // the equality records were individually corroborated by the exact
    // combinatorial classifier inside the campaign
    assert!(!result.equalities.is_empty());
    assert!(elapsed.as_secs() < 900, "runtime {elapsed:?} under 15 min");
    pass(
        2,
        "product characterization",
        format!(
            "{} graphs, {} strongly regular equality cases in {elapsed:?}",
            result.scanned,
            result.equalities.len()
        ),
    );
}

/// Criterion 3: the exact counting identity and (s̄+1)(s̄'+1) = n hold with
/// zero violations over the same universe.
#[test]
fn criterion_3_average_identities() {
    let result = run_campaign(CheckId::AvgIdentities, 8, &CampaignOptions::default())
        .expect("campaign in range");
    assert_eq!(result.violations, vec![], "no violations");
    assert!(result.scanned > 40_000);
    pass(3, "average identities", format!("{} graphs, 0 violations", result.scanned));
}

/// Criterion 4: Hoffman colorings are found with valid certificates on
/// rook(3), rook(4), Shrikhande and C6; absence is certified on Petersen
/// and C5; rook(3) has a spread.
#[test]
fn criterion_4_hoffman_colorings() {
    let mut details = Vec::new();
    for name in ["rook(3)", "rook(4)", "shrikhande", "cycle(6)"] {
        let g = named_graph(name).unwrap();
        let start = Instant::now();
        match find_hoffman_coloring(&g, BUDGET) {
            HoffmanSearchOutcome::Found { coloring, certificate, .. } => {
                let elapsed = start.elapsed();
                assert!(elapsed.as_secs() < 5, "{name} in {elapsed:?}");
                // re-verify the certificate from scratch
                let again = verify_hoffman_coloring(&g, &coloring).expect(name);
                assert_eq!(again.h, certificate.h);
                assert_eq!(again.class_size, g.n() / again.h);
                let lam_min = hoffman::params::min_eigenvalue(&g).unwrap().to_f64();
                assert_eq!(again.cross_degree as f64, -lam_min, "{name} cross degree");
                details.push(format!("{name} h={}", again.h));
            }
            other => panic!("{name}: expected a Hoffman coloring, got {other:?}"),
        }
    }
    for name in ["petersen", "cycle(5)"] {
        let g = named_graph(name).unwrap();
        match find_hoffman_coloring(&g, BUDGET) {
            HoffmanSearchOutcome::Absent { .. } => {}
            other => panic!("{name}: expected certified absence, got {other:?}"),
        }
    }
    let rook3 = named_graph("rook(3)").unwrap();
    match find_spread(&rook3, BUDGET).unwrap() {
        SpreadOutcome::Found { cliques } => {
            assert_eq!(cliques.len(), 3);
            // each clique is a grid line (a full row or a full column)
            for clique in &cliques {
                let rows: std::collections::BTreeSet<_> = clique.iter().map(|v| v / 3).collect();
                let cols: std::collections::BTreeSet<_> = clique.iter().map(|v| v % 3).collect();
                assert!(rows.len() == 1 || cols.len() == 1, "spread clique is a line");
            }
        }
        other => panic!("rook(3): expected a spread, got {other:?}"),
    }
    pass(4, "hoffman colorings", details.join(", ") + "; absent on petersen, cycle(5)");
}

/// Criterion 5: every Hoffman colorable catalog strongly regular graph has
/// integral h and integral geometric parameters, and the complement's
/// geometric parameters are integral too; L(K6) maps to (2,2,1).
#[test]
fn criterion_5_pseudo_geometric() {
    let mut colorable = Vec::new();
    for entry in catalog() {
        if !entry.class.is_primitive_srg() {
            continue;
        }
        if let HoffmanSearchOutcome::Found { .. } = find_hoffman_coloring(&entry.graph, BUDGET) {
            let geo = geometric_params_of(&entry.graph).expect(entry.name);
            let h = geo.hoffman_number();
            assert!(h.is_integer(), "{}: h = {h} integral", entry.name);
            assert!(geo.s.is_integer(), "{}: s integral", entry.name);
            assert!(geo.t.is_integer(), "{}: t integral", entry.name);
            assert!(geo.alpha.is_integer(), "{}: alpha integral", entry.name);
            let (s2, t2, a2) = complement_geometric(geo.s, geo.t, geo.alpha).expect(entry.name);
            assert!(
                s2.is_integer() && t2.is_integer() && a2.is_integer(),
                "{}: complement parameters integral",
                entry.name
            );
            colorable.push(entry.name);
        }
    }
    // the known Hoffman colorable members must all be present
    for name in ["rook(3)", "rook(4)", "triangular(6)", "shrikhande", "schlafli", "chang1",
        "chang2", "chang3"]
    {
        assert!(colorable.contains(&name), "{name} found Hoffman colorable");
    }
    // L(K6) = triangular(6): complement parameters are exactly (2,2,1)
    let geo = geometric_params_of(&named_graph("triangular(6)").unwrap()).unwrap();
    let (s2, t2, a2) = complement_geometric(geo.s, geo.t, geo.alpha).unwrap();
    assert_eq!(
        (s2.as_integer(), t2.as_integer(), a2.as_integer()),
        (Some(2), Some(2), Some(1)),
        "complement of L(K6) is (2,2,1)"
    );
    pass(5, "pseudo-geometricity", format!("hoffman colorable: {colorable:?}"));
}

/// Criterion 6: the canonical vector coloring is strict at value h (edge
/// deviation ≤ 1e-7) and locally injective on Petersen and Shrikhande; the
/// non-uniqueness witness works on Shrikhande and rook(3); simplex inner
/// products are exact to 1e-12 for c ≤ 20.
#[test]
fn criterion_6_vector_colorings() {
    for name in ["petersen", "shrikhande"] {
        let g = named_graph(name).unwrap();
        let (vc, report) = canonical_vector_coloring::<f64>(&g, 1e-7).expect(name);
        let h = hoffman_number(&g).unwrap().to_f64();
        assert!((vc.target - h).abs() < 1e-9, "{name} target is h");
        let bound = -1.0 / (h - 1.0);
        for (u, v) in g.edges() {
            assert!((vc.gram(u, v) - bound).abs() <= 1e-7, "{name} strict on edge ({u},{v})");
        }
        assert!(report.locally_injective, "{name} locally injective");
    }

    for name in ["shrikhande", "rook(3)"] {
        let g = named_graph(name).unwrap();
        let w = non_uvc_witness::<f64>(&g, 1e-7, BUDGET).expect(name);
        assert!((w.gram_simplex - 1.0).abs() < 1e-9, "{name} simplex gram = 1");
        assert!(w.gram_canonical < 1.0 - 1e-6, "{name} canonical gram < 1");
        let rs = check_vector_coloring(&g, &w.simplex).unwrap();
        let rc = check_vector_coloring(&g, &w.canonical).unwrap();
        assert!(rs.strict && rc.strict, "{name} both strict");
        assert!(!rs.locally_injective && rc.locally_injective, "{name} injectivity differs");
    }

    for c in 2..=20usize {
        let v = simplex_vectors::<f64>(c).unwrap();
        let target = -1.0 / (c as f64 - 1.0);
        for i in 0..c {
            let norm: f64 = v[i].iter().map(|x| x * x).sum::<f64>().sqrt();
            assert!((norm - 1.0).abs() <= 1e-12, "unit norm at c={c}");
            for j in (i + 1)..c {
                let ip: f64 = v[i].iter().zip(&v[j]).map(|(a, b)| a * b).sum();
                assert!((ip - target).abs() <= 1e-12, "inner product at c={c}");
            }
        }
    }
    pass(6, "vector colorings", "canonical strict+injective; witness pairs; simplex 1e-12".into());
}

/// Criterion 7: forced SDP values and the sandwich chain over the catalog.
#[test]
fn criterion_7_sdp_values() {
    let tol = 1e-5;

    let start = Instant::now();
    let c5 = named_graph("cycle(5)").unwrap();
    let theta_c5 = lovasz_theta::<f64>(&c5, ThetaVariant::Theta, tol).unwrap();
    assert!((theta_c5.value - 5.0_f64.sqrt()).abs() <= 1e-4, "theta(C5) = sqrt(5)");

    let petersen = named_graph("petersen").unwrap();
    let theta_p = lovasz_theta::<f64>(&petersen, ThetaVariant::Theta, tol).unwrap();
    assert!((theta_p.value - 4.0).abs() <= 1e-4, "theta(Petersen) = 4");

    let rep = sandwich_report(&petersen, tol, BUDGET).unwrap();
    assert!((rep.h - 2.5).abs() <= 1e-9);
    assert!((rep.chi_v - 2.5).abs() <= 1e-4, "chi_v(Petersen) = 2.5, got {}", rep.chi_v);
    assert!((rep.chi_sv - 2.5).abs() <= 1e-4, "chi_sv(Petersen) = 2.5, got {}", rep.chi_sv);
    assert_eq!((rep.chi_lower, rep.chi_upper, rep.chi_exact), (3, 3, true));
    assert!(rep.chain_holds);

    let mut checked = 0;
    for entry in catalog() {
        if entry.graph.n() > 30 {
            continue;
        }
        let start = Instant::now();
        let rep = sandwich_report(&entry.graph, tol, BUDGET).expect(entry.name);
        let elapsed = start.elapsed();
        assert!(rep.chain_holds, "{}: sandwich chain", entry.name);
        assert!(elapsed.as_secs() < 60, "{}: solve in {elapsed:?}", entry.name);
        checked += 1;
    }
    pass(
        7,
        "sdp values",
        format!("theta(C5), theta(Petersen), sandwich over {checked} catalog graphs in {:?}",
            start.elapsed()),
    );
}

/// Criterion 8: the triangle-count bound is tight on rook(3) and strict on
/// the Hoffman colorable non-strongly-regular C6.
#[test]
fn criterion_8_triangle_bound() {
    let rook3 = named_graph("rook(3)").unwrap();
    let report = hoffman::params::bound_report(&rook3, BUDGET);
    let tri = report.triangle_bound.value().expect("rook(3) is Hoffman colorable");
    assert_eq!(tri.chi, 3);
    assert_eq!((tri.bound.approx, tri.actual), (6.0, 6));
    assert!(tri.equality, "equality on the strongly regular rook(3)");

    let c6 = named_graph("cycle(6)").unwrap();
    let report = hoffman::params::bound_report(&c6, BUDGET);
    let tri = report.triangle_bound.value().expect("C6 is Hoffman colorable");
    assert_eq!(tri.actual, 0);
    assert!(
        tri.actual as f64 > tri.bound.approx && !tri.equality,
        "strict bound on C6: N = 0 > {}",
        tri.bound.approx
    );
    pass(8, "triangle bound", format!("rook(3) equality at 6; C6 strict ({})", tri.bound.approx));
}

/// Criterion 9: the complement of the icosahedron is co-edge-regular but
/// not strongly regular; χ ≥ s̄+1 holds with s̄+1 strictly above h, and no
/// optimal coloring is a Hoffman coloring.
#[test]
fn criterion_9_co_edge_regular() {
    let co_icosa = named_graph("icosahedron").unwrap().complement();
    let class = classify_regularity(&co_icosa);
    assert_eq!(class.kind, RegularityKind::CoEdgeRegular, "co-edge-regular, not srg");
    assert_eq!((class.k, class.c), (Some(6), Some(4)));

    let avg = average_params(&co_icosa).unwrap();
    let s_plus_1 = avg.s_bar.to_f64() + 1.0;
    assert_eq!(avg.s_bar.as_integer(), Some(2), "s_bar = 2 exactly");

    // cross-check via the edge-data quadratic
    let s_again = s_bar_from_edge_data(avg.n, avg.k, avg.a_bar).unwrap();
    assert_eq!(s_again, avg.s_bar, "quadratic recovers s_bar");

    let h = hoffman_number(&co_icosa).unwrap().to_f64();
    assert!(s_plus_1 > h + 1e-6, "s_bar+1 = {s_plus_1} strictly exceeds h = {h}");

    let chi = match chromatic_number(&co_icosa, BUDGET) {
        ChromaticOutcome::Exact { chi, witness } => {
            // every optimal coloring is rejected; h is not even integral
            assert!(verify_hoffman_coloring(&co_icosa, &witness).is_err());
            chi
        }
        other => panic!("chromatic search should finish, got {other:?}"),
    };
    assert!(chi as f64 >= s_plus_1 - 1e-9, "chi = {chi} >= s_bar+1 = {s_plus_1}");
    assert!(matches!(
        find_hoffman_coloring(&co_icosa, BUDGET),
        HoffmanSearchOutcome::Absent { .. }
    ));
    pass(9, "co-edge-regular bound", format!("chi = {chi} >= s̄+1 = {s_plus_1} > h = {h:.6}"));
}
