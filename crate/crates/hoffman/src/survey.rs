//! Exhaustive small-graph generation, corpus ingestion, and the
//! theorem-verification campaigns.

use std::collections::BTreeMap;
use std::io::BufRead;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use serde::Serialize;

use crate::coloring;
use crate::exact::Rational;
use crate::graph::{
    classify_regularity, parse_graph6, to_graph6, Graph,
};
use crate::params;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SurveyError {
    #[error("unknown campaign check {0:?}")]
    UnknownCheck(String),
    #[error("enumeration limited to n <= {max}, requested {requested}")]
    TooLarge { requested: usize, max: usize },
    #[error("cannot read corpus: {0}")]
    CorpusUnreadable(String),
}

/// Hard cap for the labeled enumerator; beyond this the labeled multiplicity
/// makes exhaustive scans pointless.
pub const ENUMERATION_MAX_N: usize = 10;

/// Calls `f` on every labeled `k`-regular graph on `n` vertices, exactly
/// once each. Backtracks over the upper-triangle entries row by row with
/// degree feasibility pruning. Infeasible parameters yield no calls.
pub fn for_each_regular_graph(n: usize, k: usize, connected_only: bool, mut f: impl FnMut(&Graph)) {
    if n == 0 || k >= n || (n * k) % 2 == 1 {
        return;
    }
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))).collect();
    let mut adj = vec![false; n * n];
    let mut deg = vec![0usize; n];
    enumerate_from(n, k, &pairs, 0, &mut adj, &mut deg, &mut |adj| {
        let g = Graph::from_adjacency(n, adj.to_vec());
        if !connected_only || g.is_connected() {
            f(&g);
        }
    });
}

fn enumerate_from(
    n: usize,
    k: usize,
    pairs: &[(usize, usize)],
    pos: usize,
    adj: &mut [bool],
    deg: &mut [usize],
    emit: &mut impl FnMut(&[bool]),
) {
    if pos == pairs.len() {
        // rows 0..n-1 were checked as they closed; the last vertex remains
        if deg[n - 1] == k {
            emit(adj);
        }
        return;
    }
    let (i, j) = pairs[pos];
    // pairs (i, j..n-1) are the only ones left that can raise deg[i]
    if deg[i] + (n - j) < k {
        return;
    }
    let row_ends = j == n - 1;

    // no edge at (i, j)
    if !(row_ends && deg[i] != k) {
        enumerate_from(n, k, pairs, pos + 1, adj, deg, emit);
    }

    // edge at (i, j)
    if deg[i] < k && deg[j] < k {
        adj[i * n + j] = true;
        adj[j * n + i] = true;
        deg[i] += 1;
        deg[j] += 1;
        if !(row_ends && deg[i] != k) {
            enumerate_from(n, k, pairs, pos + 1, adj, deg, emit);
        }
        adj[i * n + j] = false;
        adj[j * n + i] = false;
        deg[i] -= 1;
        deg[j] -= 1;
    }
}

/// Collects [`for_each_regular_graph`] into a vector.
pub fn enumerate_regular_graphs(
    n: usize,
    k: usize,
    connected_only: bool,
) -> Result<Vec<Graph>, SurveyError> {
    if n > ENUMERATION_MAX_N {
        return Err(SurveyError::TooLarge { requested: n, max: ENUMERATION_MAX_N });
    }
    let mut out = Vec::new();
    for_each_regular_graph(n, k, connected_only, |g| out.push(g.clone()));
    Ok(out)
}

/// Identifier of a verification campaign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckId {
    /// `h(G)·h(Ḡ) ≤ n`, equality exactly on strongly regular graphs.
    Product,
    /// Exact average-parameter identities and `(s̄+1)(s̄'+1) = n`.
    AvgIdentities,
    /// `h(G) ≤ s̄+1`, equality exactly on strongly regular graphs.
    HLeSBar,
    /// Parameter search reproducing the Hoffman-number-at-most-3 list.
    CorH3,
    /// Every optimal coloring of a Hoffman colorable graph is equitable
    /// with constant cross-degrees.
    HoffmanEquitable,
}

impl CheckId {
    pub fn parse(s: &str) -> Result<Self, SurveyError> {
        match s {
            "product" => Ok(Self::Product),
            "avg-identities" => Ok(Self::AvgIdentities),
            "h-le-sbar" => Ok(Self::HLeSBar),
            "cor-h3" => Ok(Self::CorH3),
            "hoffman-equitable" => Ok(Self::HoffmanEquitable),
            other => Err(SurveyError::UnknownCheck(other.into())),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Product => "product",
            Self::AvgIdentities => "avg-identities",
            Self::HLeSBar => "h-le-sbar",
            Self::CorH3 => "cor-h3",
            Self::HoffmanEquitable => "hoffman-equitable",
        }
    }
}

/// A record in a campaign report. `graph6` identifies the offending graph
/// (or the parameter tuple, for the parameter-grid campaign); `values`
/// carries the numbers needed to re-check the claim independently.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Record {
    pub graph6: String,
    pub message: String,
    pub values: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CampaignParams {
    pub n_max: usize,
    pub slack_tol: f64,
    pub equality_tol: f64,
    pub jobs: usize,
}

/// Aggregated result of a campaign run.
#[derive(Debug, Clone, Serialize)]
pub struct CampaignResult {
    pub campaign: String,
    pub scanned: u64,
    pub violations: Vec<Record>,
    pub equalities: Vec<Record>,
    pub params: CampaignParams,
    pub runtime_ms: u128,
}

impl CampaignResult {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Options for [`run_campaign`].
#[derive(Debug, Clone)]
pub struct CampaignOptions {
    pub jobs: usize,
    /// Inequality slack below which a violation is declared.
    pub slack_tol: f64,
    /// Absolute slack treated as equality (must be corroborated exactly).
    pub equality_tol: f64,
    /// Search budget for the coloring-based campaign.
    pub budget: u64,
    /// Campaign universe override: scan these graphs instead of enumerating.
    pub corpus: Option<Vec<Graph>>,
}

impl Default for CampaignOptions {
    fn default() -> Self {
        Self { jobs: 1, slack_tol: 1e-7, equality_tol: 1e-7, budget: 100_000_000, corpus: None }
    }
}

struct CellOutcome {
    scanned: u64,
    violations: Vec<Record>,
    equalities: Vec<Record>,
}

fn record(g6: &str, message: impl Into<String>, values: &[(&str, String)]) -> Record {
    Record {
        graph6: g6.to_string(),
        message: message.into(),
        values: values.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
    }
}

/// Runs a verification campaign over every connected regular non-complete
/// non-empty graph with at most `n_max` vertices (or over the parameter
/// grid, for [`CheckId::CorH3`]; or over `options.corpus` when given).
pub fn run_campaign(
    check: CheckId,
    n_max: usize,
    options: &CampaignOptions,
) -> Result<CampaignResult, SurveyError> {
    let start = Instant::now();
    let mut result = if check == CheckId::CorH3 {
        run_cor_h3(n_max, options)?
    } else if let Some(corpus) = &options.corpus {
        let mut outcome = CellOutcome { scanned: 0, violations: vec![], equalities: vec![] };
        for g in corpus {
            evaluate_graph(check, g, options, &mut outcome);
        }
        finalize(check, n_max, options, vec![outcome])
    } else {
        if n_max > ENUMERATION_MAX_N {
            return Err(SurveyError::TooLarge { requested: n_max, max: ENUMERATION_MAX_N });
        }
        // one work unit per (n, k) cell; k = 0 (empty) and k = n-1
        // (complete) are skipped per the standing assumption
        let cells: Vec<(usize, usize)> =
            (2..=n_max).flat_map(|n| (1..n.saturating_sub(1)).map(move |k| (n, k))).collect();
        let next = AtomicUsize::new(0);
        let workers = options.jobs.max(1).min(cells.len().max(1));
        let mut outcomes: Vec<(usize, CellOutcome)> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|_| {
                    let cells = &cells;
                    let next = &next;
                    scope.spawn(move || {
                        let mut local = Vec::new();
                        loop {
                            let idx = next.fetch_add(1, Ordering::Relaxed);
                            if idx >= cells.len() {
                                break;
                            }
                            let (n, k) = cells[idx];
                            let mut outcome =
                                CellOutcome { scanned: 0, violations: vec![], equalities: vec![] };
                            for_each_regular_graph(n, k, true, |g| {
                                evaluate_graph(check, g, options, &mut outcome);
                            });
                            local.push((idx, outcome));
                        }
                        local
                    })
                })
                .collect();
            handles.into_iter().flat_map(|h| h.join().expect("campaign worker panicked")).collect()
        });
        // merge in cell order so reports are independent of worker count
        outcomes.sort_by_key(|(idx, _)| *idx);
        finalize(check, n_max, options, outcomes.into_iter().map(|(_, o)| o).collect())
    };
    result.runtime_ms = start.elapsed().as_millis();
    Ok(result)
}

fn finalize(
    check: CheckId,
    n_max: usize,
    options: &CampaignOptions,
    outcomes: Vec<CellOutcome>,
) -> CampaignResult {
    let mut scanned = 0;
    let mut violations = Vec::new();
    let mut equalities = Vec::new();
    for o in outcomes {
        scanned += o.scanned;
        violations.extend(o.violations);
        equalities.extend(o.equalities);
    }
    CampaignResult {
        campaign: check.name().to_string(),
        scanned,
        violations,
        equalities,
        params: CampaignParams {
            n_max,
            slack_tol: options.slack_tol,
            equality_tol: options.equality_tol,
            jobs: options.jobs,
        },
        runtime_ms: 0,
    }
}

fn evaluate_graph(check: CheckId, g: &Graph, options: &CampaignOptions, out: &mut CellOutcome) {
    // standing assumption: neither empty nor complete, connected, regular
    if g.is_empty_graph() || g.is_complete() || !g.is_connected() {
        return;
    }
    if g.regular_valency().is_none() {
        return;
    }
    out.scanned += 1;
    match check {
        CheckId::Product => check_product(g, options, out),
        CheckId::AvgIdentities => check_avg_identities(g, options, out),
        CheckId::HLeSBar => check_h_le_sbar(g, options, out),
        CheckId::HoffmanEquitable => check_hoffman_equitable(g, options, out),
        CheckId::CorH3 => unreachable!("parameter campaign has no graph universe"),
    }
}

/// `h(G)h(Ḡ) ≤ n`, with equality exactly on strongly regular graphs. The
/// equality set is decided by the combinatorial classifier, never by float
/// equality alone; any disagreement between the two is itself a violation.
fn check_product(g: &Graph, options: &CampaignOptions, out: &mut CellOutcome) {
    let g6 = to_graph6(g);
    let n = g.n() as f64;
    let h = params::hoffman_number(g).expect("non-empty graph").to_f64();
    let h_comp = params::hoffman_number(&g.complement()).expect("non-complete graph").to_f64();
    let product = h * h_comp;
    let slack = n - product;
    let is_srg = classify_regularity(g).is_strongly_regular();
    let vals = |extra: &str| {
        vec![
            ("h", format!("{h:.12}")),
            ("h_complement", format!("{h_comp:.12}")),
            ("product", format!("{product:.12}")),
            ("slack", format!("{slack:.3e}")),
            ("srg", extra.to_string()),
        ]
    };
    if slack < -options.slack_tol {
        out.violations.push(record(&g6, "h(G)h(complement) exceeds n", &vals(&is_srg.to_string())));
        return;
    }
    let near_equality = slack.abs() <= options.equality_tol;
    if near_equality != is_srg {
        out.violations.push(record(
            &g6,
            "equality detection disagrees with the combinatorial classifier",
            &vals(&is_srg.to_string()),
        ));
        return;
    }
    if is_srg {
        out.equalities.push(record(&g6, "equality case", &vals("true")));
    }
}

/// Exact identity `c̄(n-k-1) = k(k-ā-1)`, the complement relations for the
/// average parameters, and `(s̄+1)(s̄'+1) = n`.
fn check_avg_identities(g: &Graph, options: &CampaignOptions, out: &mut CellOutcome) {
    let g6 = to_graph6(g);
    let n = g.n() as i64;
    let k = g.regular_valency().unwrap() as i64;
    let avg = params::average_params(g).expect("regular non-empty non-complete");
    let comp = g.complement();
    let avg_comp = params::average_params(&comp).expect("complement non-empty non-complete");

    // (i) c̄(n-k-1) = k(k-ā-1), exact rationals
    let lhs = avg.c_bar * Rational::from_integer(n - k - 1);
    let rhs = Rational::from_integer(k) * (Rational::from_integer(k - 1) - avg.a_bar);
    if lhs != rhs {
        out.violations.push(record(
            &g6,
            "counting identity c(n-k-1) = k(k-a-1) fails",
            &[("lhs", lhs.to_string()), ("rhs", rhs.to_string())],
        ));
        return;
    }

    // (ii) complement averages, exact rationals
    let expect_a = Rational::from_integer(n - 2 - 2 * k) + avg.c_bar;
    let expect_c = Rational::from_integer(n - 2 * k) + avg.a_bar;
    if avg_comp.a_bar != expect_a || avg_comp.c_bar != expect_c {
        out.violations.push(record(
            &g6,
            "complement average parameters do not match",
            &[
                ("a_bar_comp", avg_comp.a_bar.to_string()),
                ("expected_a", expect_a.to_string()),
                ("c_bar_comp", avg_comp.c_bar.to_string()),
                ("expected_c", expect_c.to_string()),
            ],
        ));
        return;
    }

    // (iii) complement roots: τ̄' = -1-θ̄ within 1e-9
    let tau_comp = avg_comp.tau_bar.to_f64();
    let expect_tau = -1.0 - avg.theta_bar.to_f64();
    if (tau_comp - expect_tau).abs() > 1e-9 {
        out.violations.push(record(
            &g6,
            "complement root relation fails",
            &[("tau_bar_comp", format!("{tau_comp}")), ("expected", format!("{expect_tau}"))],
        ));
        return;
    }

    // (s̄+1)(s̄'+1) = n
    let product = (avg.s_bar.to_f64() + 1.0) * (avg_comp.s_bar.to_f64() + 1.0);
    if (product - n as f64).abs() > options.equality_tol {
        out.violations.push(record(
            &g6,
            "(s+1)(s'+1) = n fails",
            &[("product", format!("{product:.12}")), ("n", n.to_string())],
        ));
    }
}

/// `h(G) ≤ s̄+1` with equality exactly on strongly regular graphs.
fn check_h_le_sbar(g: &Graph, options: &CampaignOptions, out: &mut CellOutcome) {
    let g6 = to_graph6(g);
    let h = params::hoffman_number(g).expect("non-empty graph").to_f64();
    let avg = params::average_params(g).expect("regular non-empty non-complete");
    let s_plus_1 = avg.s_bar.to_f64() + 1.0;
    let is_srg = classify_regularity(g).is_strongly_regular();
    let vals = vec![
        ("h", format!("{h:.12}")),
        ("s_bar_plus_1", format!("{s_plus_1:.12}")),
        ("srg", is_srg.to_string()),
    ];
    if h > s_plus_1 + 1e-9 {
        out.violations.push(record(&g6, "h exceeds s_bar + 1", &vals));
        return;
    }
    let near_equality = (s_plus_1 - h).abs() <= options.equality_tol;
    if near_equality != is_srg {
        out.violations.push(record(
            &g6,
            "equality in h <= s_bar+1 disagrees with the classifier",
            &vals,
        ));
        return;
    }
    if is_srg {
        out.equalities.push(record(&g6, "equality case", &vals));
    }
}

/// Hoffman colorability is equivalent to `χ = h` with `h` integral, and in
/// that case every optimal coloring is equitable with every cross-degree
/// equal to `-λmin`. Checks both directions and every optimal coloring.
fn check_hoffman_equitable(g: &Graph, options: &CampaignOptions, out: &mut CellOutcome) {
    let g6 = to_graph6(g);
    let h = params::hoffman_number(g).expect("non-empty graph");
    let h_int = h.nearest_integer_within(1e-7);
    let chi = match coloring::chromatic_number(g, options.budget) {
        coloring::ChromaticOutcome::Exact { chi, .. } => chi,
        coloring::ChromaticOutcome::Interval { .. } => {
            out.violations.push(record(&g6, "chromatic search exceeded budget", &[]));
            return;
        }
    };
    let hoffman_colorable = h_int == Some(chi as i64);

    let search = coloring::find_hoffman_coloring(g, options.budget);
    let found = matches!(search, coloring::HoffmanSearchOutcome::Found { .. });
    if found != hoffman_colorable {
        out.violations.push(record(
            &g6,
            "search outcome disagrees with chi = h test",
            &[
                ("chi", chi.to_string()),
                ("h", format!("{:.9}", h.to_f64())),
                ("found", found.to_string()),
            ],
        ));
        return;
    }
    if !hoffman_colorable {
        return;
    }
    // every optimal coloring must verify
    let mut all_ok = true;
    coloring::for_each_coloring(g, chi, |col| {
        if coloring::verify_hoffman_coloring(g, col).is_err() {
            all_ok = false;
        }
    });
    if !all_ok {
        out.violations.push(record(
            &g6,
            "an optimal coloring is not a Hoffman coloring",
            &[("chi", chi.to_string())],
        ));
        return;
    }
    out.equalities.push(record(&g6, "hoffman colorable", &[("chi", chi.to_string())]));
}

/// The parameter-grid campaign: the feasible primitive tuples with
/// `h ≤ 3, n ≤ n_max` must be exactly the known six.
fn run_cor_h3(n_max: usize, options: &CampaignOptions) -> Result<CampaignResult, SurveyError> {
    // the six parameter sets with Hoffman number at most 3
    const EXPECTED: &[(i64, i64, i64, i64)] = &[
        (5, 2, 0, 1),
        (9, 4, 1, 2),
        (10, 3, 0, 1),
        (15, 6, 1, 3),
        (16, 5, 0, 2),
        (27, 10, 1, 5),
    ];
    let found = params::srg_param_search(n_max, 3.0)
        .map_err(|_| SurveyError::TooLarge { requested: n_max, max: 200 })?;
    let mut violations = Vec::new();
    let mut equalities = Vec::new();
    for cand in &found {
        let tuple = (cand.n, cand.k, cand.a, cand.c);
        let subject = format!("srg({},{},{},{})", cand.n, cand.k, cand.a, cand.c);
        let vals = vec![
            ("s", cand.geometric.s.to_string()),
            ("t", cand.geometric.t.to_string()),
            ("alpha", cand.geometric.alpha.to_string()),
            ("h", cand.hoffman_number.to_string()),
        ];
        if EXPECTED.contains(&tuple) {
            equalities.push(record(&subject, "expected parameter set", &vals));
        } else {
            violations.push(record(&subject, "unexpected parameter set", &vals));
        }
    }
    for &(n, k, a, c) in EXPECTED {
        if (n as usize) <= n_max && !found.iter().any(|x| (x.n, x.k, x.a, x.c) == (n, k, a, c)) {
            violations.push(record(
                &format!("srg({n},{k},{a},{c})"),
                "expected parameter set missing",
                &[],
            ));
        }
    }
    Ok(CampaignResult {
        campaign: CheckId::CorH3.name().to_string(),
        scanned: found.len() as u64,
        violations,
        equalities,
        params: CampaignParams {
            n_max,
            slack_tol: options.slack_tol,
            equality_tol: options.equality_tol,
            jobs: 1,
        },
        runtime_ms: 0,
    })
}

/// Per-line diagnostic from corpus ingestion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusDiagnostic {
    pub line: usize,
    pub message: String,
}

/// Reads a graph6-per-line corpus. Header lines starting with `>` are
/// skipped; parse failures become diagnostics without aborting the stream.
pub fn ingest_corpus(
    reader: impl std::io::Read,
) -> Result<(Vec<Graph>, Vec<CorpusDiagnostic>), SurveyError> {
    let reader = std::io::BufReader::new(reader);
    let mut graphs = Vec::new();
    let mut diagnostics = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| SurveyError::CorpusUnreadable(e.to_string()))?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('>') {
            continue;
        }
        match parse_graph6(trimmed) {
            Ok(g) => graphs.push(g),
            Err(e) => {
                diagnostics.push(CorpusDiagnostic { line: idx + 1, message: e.to_string() })
            }
        }
    }
    Ok((graphs, diagnostics))
}

/// Opens and ingests a corpus file.
pub fn ingest_corpus_file(
    path: &std::path::Path,
) -> Result<(Vec<Graph>, Vec<CorpusDiagnostic>), SurveyError> {
    let file = std::fs::File::open(path)
        .map_err(|e| SurveyError::CorpusUnreadable(format!("{}: {e}", path.display())))?;
    ingest_corpus(file)
}
