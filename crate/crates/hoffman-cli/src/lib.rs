//! Command-line interface: every toolkit operation as a subcommand with
//! text or JSON output.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error, 3 inconclusive
//! (a search or solver ran out of budget).

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value as Json};

use hoffman::coloring::{self, ChromaticOutcome, DelsarteOutcome, HoffmanSearchOutcome,
    SpreadOutcome};
use hoffman::graph::{self, classify_regularity, Graph};
use hoffman::params;
use hoffman::survey;
use hoffman::theta::{self, ThetaVariant};
use hoffman::vector;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "hoffman",
    about = "Hoffman colorings, strongly regular parameters and spectral bounds",
    version
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text, env = "HOFFMAN_FORMAT")]
    format: Format,
    /// Numerical tolerance for spectral computations and the SDP solver.
    #[arg(long, global = true, default_value_t = 1e-5, env = "HOFFMAN_TOL")]
    tol: f64,
    /// Node budget for exhaustive searches.
    #[arg(long, global = true, default_value_t = 100_000_000, env = "HOFFMAN_BUDGET")]
    budget: u64,
    /// Worker threads (survey only).
    #[arg(long, global = true, default_value_t = 1, env = "HOFFMAN_JOBS")]
    jobs: usize,
    /// Write the output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct InputArg {
    /// Graph input: `named:FAMILY(args)`, `g6:STRING`, or a file path
    /// (graph6 one-per-line, or edge list starting with the vertex count).
    input: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Regularity classification, parameter systems and every bound.
    Analyze(InputArg),
    /// Exact coloring computations and Hoffman certificates.
    Color {
        #[arg(long, value_enum)]
        mode: ColorMode,
        #[command(flatten)]
        input: InputArg,
    },
    /// Lovász theta number of the graph.
    Theta {
        #[arg(long, value_enum, default_value_t = VariantArg::Theta)]
        variant: VariantArg,
        #[command(flatten)]
        input: InputArg,
    },
    /// The chain h <= chi_v <= chi_sv <= chi.
    Sandwich(InputArg),
    /// Two Gram-distinct optimal strict vector colorings.
    Witness(InputArg),
    /// Feasible strongly regular parameter tuples with bounded Hoffman number.
    Searchsrg {
        #[arg(long)]
        nmax: usize,
        #[arg(long)]
        hmax: f64,
    },
    /// Exhaustive verification campaigns over small regular graphs.
    Survey {
        #[arg(long)]
        check: String,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// List the embedded named graphs with their verified parameters.
    Catalog,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ColorMode {
    Chromatic,
    Hoffman,
    Spread,
    DelsarteClique,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Theta,
    ThetaPrime,
}

/// Parses an input spec into a graph.
fn load_graph(spec: &str) -> Result<Graph, String> {
    if let Some(name) = spec.strip_prefix("named:") {
        return graph::named_graph(name).map_err(|e| e.to_string());
    }
    if let Some(g6) = spec.strip_prefix("g6:") {
        return graph::parse_graph6(g6).map_err(|e| e.to_string());
    }
    let text = std::fs::read_to_string(spec).map_err(|e| format!("cannot read {spec}: {e}"))?;
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('>'))
        .ok_or_else(|| format!("{spec}: no graph data"))?;
    if first.chars().all(|c| c.is_ascii_digit()) {
        // edge-list format: first line is the vertex count
        graph::parse_edge_list(&text).map_err(|e| e.to_string())
    } else {
        graph::parse_graph6(first).map_err(|e| e.to_string())
    }
}

struct Ctx {
    format: Format,
    tol: f64,
    budget: u64,
    jobs: usize,
    out: Option<PathBuf>,
}

impl Ctx {
    fn emit(&self, sink: &mut dyn Write, text: String) -> i32 {
        let payload = if text.ends_with('\n') { text } else { text + "\n" };
        match &self.out {
            Some(path) => {
                if let Err(e) = std::fs::write(path, payload) {
                    let _ = writeln!(sink, "error: cannot write {}: {e}", path.display());
                    return EXIT_DOMAIN;
                }
                let _ = writeln!(sink, "wrote {}", path.display());
                EXIT_OK
            }
            None => {
                let _ = write!(sink, "{payload}");
                EXIT_OK
            }
        }
    }

    fn emit_json(&self, sink: &mut dyn Write, value: &Json) -> i32 {
        self.emit(sink, serde_json::to_string_pretty(value).expect("serializable"))
    }
}

/// Runs the CLI on `args` (including the program name), writing all output
/// to `sink`. Returns the process exit code.
pub fn dispatch<I, S>(args: I, sink: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(sink, "{e}");
            return if e.exit_code() == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let ctx = Ctx {
        format: cli.format,
        tol: cli.tol,
        budget: cli.budget,
        jobs: cli.jobs,
        out: cli.out.clone(),
    };
    match run(cli.command, &ctx, sink) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(sink, "error: {msg}");
            EXIT_DOMAIN
        }
    }
}

fn run(cmd: Command, ctx: &Ctx, sink: &mut dyn Write) -> Result<i32, String> {
    match cmd {
        Command::Analyze(input) => analyze(&load_graph(&input.input)?, &input.input, ctx, sink),
        Command::Color { mode, input } => {
            color(&load_graph(&input.input)?, mode, ctx, sink)
        }
        Command::Theta { variant, input } => {
            theta_cmd(&load_graph(&input.input)?, variant, ctx, sink)
        }
        Command::Sandwich(input) => sandwich(&load_graph(&input.input)?, ctx, sink),
        Command::Witness(input) => witness(&load_graph(&input.input)?, ctx, sink),
        Command::Searchsrg { nmax, hmax } => searchsrg(nmax, hmax, ctx, sink),
        Command::Survey { check, nmax, corpus } => survey_cmd(&check, nmax, corpus, ctx, sink),
        Command::Catalog => catalog_cmd(ctx, sink),
    }
}

fn value_json(v: &params::Value) -> Json {
    match v.exact_string() {
        Some(e) => json!({"approx": v.to_f64(), "exact": e}),
        None => json!({"approx": v.to_f64()}),
    }
}

fn entry_json<V: serde::Serialize>(e: &params::Entry<V>) -> Json {
    serde_json::to_value(e).expect("serializable entry")
}

fn analyze(g: &Graph, input: &str, ctx: &Ctx, sink: &mut dyn Write) -> Result<i32, String> {
    let class = classify_regularity(g);
    let h = params::hoffman_number(g).map_err(|e| e.to_string())?;
    let bounds = params::bound_report(g, ctx.budget);
    let geometric = params::geometric_params_of(g).ok();
    let srg = params::srg_data(g);
    let average = params::average_params(g).ok();

    if ctx.format == Format::Json {
        let mut doc = json!({
            "input": input,
            "n": g.n(),
            "edges": g.edge_count(),
            "regularity": serde_json::to_value(&class).unwrap(),
            "hoffman_number": value_json(&h),
            "bounds": {
                "hoffman_number": entry_json(&bounds.hoffman_number),
                "ratio_bound_independence": entry_json(&bounds.ratio_bound_independence),
                "classic_chromatic_bound": entry_json(&bounds.classic_chromatic_bound),
                "neumaier_clique_bound": entry_json(&bounds.neumaier_clique_bound),
                "coedge_chromatic_bound": entry_json(&bounds.coedge_chromatic_bound),
                "triangle_bound": entry_json(&bounds.triangle_bound),
                "hoffman_product": entry_json(&bounds.hoffman_product),
            },
        });
        if let Some(geo) = &geometric {
            doc["geometric"] = json!({
                "s": {"approx": geo.s.to_f64(), "exact": geo.s.to_string()},
                "t": {"approx": geo.t.to_f64(), "exact": geo.t.to_string()},
                "alpha": {"approx": geo.alpha.to_f64(), "exact": geo.alpha.to_string()},
                "classification": serde_json::to_value(geo.classification).unwrap(),
            });
        }
        if let Some(srg) = &srg {
            doc["srg"] = json!({
                "n": srg.n, "k": srg.k, "a": srg.a, "c": srg.c,
                "theta": {"approx": srg.theta.to_f64(), "exact": srg.theta.to_string()},
                "tau": {"approx": srg.tau.to_f64(), "exact": srg.tau.to_string()},
                "primitive": srg.primitive,
            });
        }
        if let Some(avg) = &average {
            doc["average"] = json!({
                "a_bar": avg.a_bar.to_string(),
                "c_bar": avg.c_bar.to_string(),
                "tau_bar": {"approx": avg.tau_bar.to_f64(), "exact": avg.tau_bar.to_string()},
                "theta_bar": {"approx": avg.theta_bar.to_f64(), "exact": avg.theta_bar.to_string()},
                "s_bar": {"approx": avg.s_bar.to_f64(), "exact": avg.s_bar.to_string()},
            });
        }
        return Ok(ctx.emit_json(sink, &doc));
    }

    let mut text = String::new();
    text += &format!("input          {input}\n");
    text += &format!("n, edges       {}, {}\n", g.n(), g.edge_count());
    text += &format!("regularity     {:?}", class.kind);
    if let Some((n, k, a, c)) = class.srg_params() {
        text += &format!(" ({n},{k},{a},{c})");
        if class.primitive == Some(true) {
            text += " primitive";
        }
    } else if let Some(k) = class.k {
        text += &format!(" k={k}");
        if let Some(a) = class.a {
            text += &format!(" a={a}");
        }
        if let Some(c) = class.c {
            text += &format!(" c={c}");
        }
    }
    text.push('\n');
    text += &format!("hoffman h      {}\n", display_value(&h));
    if let Some(geo) = &geometric {
        text += &format!(
            "geometric      s={} t={} alpha={} [{}]\n",
            geo.s, geo.t, geo.alpha, geo.classification
        );
    }
    if let Some(avg) = &average {
        text += &format!(
            "average        a_bar={} c_bar={} tau_bar={} s_bar={}\n",
            avg.a_bar, avg.c_bar, avg.tau_bar, avg.s_bar
        );
    }
    text += &render_bounds(&bounds);
    Ok(ctx.emit(sink, text))
}

fn display_value(v: &params::Value) -> String {
    match v.exact_string() {
        Some(e) => format!("{} (= {})", v.to_f64(), e),
        None => format!("{}", v.to_f64()),
    }
}

fn render_bounds(b: &params::BoundReport) -> String {
    fn line<V: serde::Serialize>(
        name: &str,
        e: &params::Entry<V>,
        show: impl Fn(&V) -> String,
    ) -> String {
        match (&e.value, &e.reason) {
            (Some(v), _) => format!("{name} {}\n", show(v)),
            (None, Some(r)) => format!("{name} n/a ({r})\n"),
            (None, None) => format!("{name} n/a\n"),
        }
    }
    let mut out = String::new();
    out += &line("bound chi>=h   ", &b.hoffman_number, |v| format!("{}", v.approx));
    out += &line("ratio alpha<=  ", &b.ratio_bound_independence, |v| format!("{}", v.approx));
    out += &line("chi >= n/alpha ", &b.classic_chromatic_bound, |v| format!("{}", v.approx));
    out += &line("neumaier omega<=", &b.neumaier_clique_bound, |v| format!("{}", v.approx));
    out += &line("coedge chi>=   ", &b.coedge_chromatic_bound, |v| format!("{}", v.approx));
    out += &line("triangles N>=  ", &b.triangle_bound, |v| {
        format!("{} (actual {}{})", v.bound.approx, v.actual, if v.equality { ", equality" } else { "" })
    });
    out += &line("h(G)h(~G)      ", &b.hoffman_product, |v| {
        format!("{} (n - product = {:.3e})", v.product, v.slack)
    });
    out
}

fn color(g: &Graph, mode: ColorMode, ctx: &Ctx, sink: &mut dyn Write) -> Result<i32, String> {
    match mode {
        ColorMode::Chromatic => match coloring::chromatic_number(g, ctx.budget) {
            ChromaticOutcome::Exact { chi, witness } => {
                let doc = json!({
                    "mode": "chromatic", "exact": true, "chi": chi,
                    "coloring": witness.assignment,
                });
                Ok(emit_doc(ctx, sink, &doc, format!("chi = {chi}\ncoloring {:?}\n", witness.assignment)))
            }
            ChromaticOutcome::Interval { lower, upper, witness } => {
                let doc = json!({
                    "mode": "chromatic", "exact": false,
                    "chi_lower": lower, "chi_upper": upper,
                    "coloring": witness.assignment,
                });
                emit_doc(ctx, sink, &doc, format!("chi in [{lower}, {upper}] (budget exceeded)\n"));
                Ok(EXIT_INCONCLUSIVE)
            }
        },
        ColorMode::Hoffman => {
            let outcome = coloring::find_hoffman_coloring_checked(g, ctx.budget)
                .map_err(|e| e.to_string())?;
            match outcome {
                HoffmanSearchOutcome::Found { coloring, certificate, trivial } => {
                    let doc = json!({
                        "mode": "hoffman", "outcome": "found", "trivial": trivial,
                        "coloring": coloring.assignment,
                        "certificate": serde_json::to_value(&certificate).unwrap(),
                    });
                    Ok(emit_doc(ctx, sink, &doc, format!(
                        "hoffman coloring found{}\nh = {}, class size {}, cross degree {}\nclasses {:?}\n",
                        if trivial { " (trivial)" } else { "" },
                        certificate.h, certificate.class_size, certificate.cross_degree,
                        certificate.class_members,
                    )))
                }
                HoffmanSearchOutcome::Absent { reason } => {
                    let doc = json!({"mode": "hoffman", "outcome": "absent", "reason": reason.to_string()});
                    Ok(emit_doc(ctx, sink, &doc, format!("no hoffman coloring: {reason}\n")))
                }
                HoffmanSearchOutcome::Inconclusive { nodes } => {
                    let doc = json!({"mode": "hoffman", "outcome": "inconclusive", "nodes": nodes});
                    emit_doc(ctx, sink, &doc, "search budget exceeded\n".into());
                    Ok(EXIT_INCONCLUSIVE)
                }
            }
        }
        ColorMode::Spread => {
            match coloring::find_spread(g, ctx.budget).map_err(|e| e.to_string())? {
                SpreadOutcome::Found { cliques } => {
                    let doc = json!({"mode": "spread", "outcome": "found", "cliques": cliques});
                    Ok(emit_doc(ctx, sink, &doc, format!("spread found: {cliques:?}\n")))
                }
                SpreadOutcome::Absent { reason } => {
                    let doc = json!({"mode": "spread", "outcome": "absent", "reason": reason});
                    Ok(emit_doc(ctx, sink, &doc, format!("no spread: {reason}\n")))
                }
                SpreadOutcome::Inconclusive => {
                    let doc = json!({"mode": "spread", "outcome": "inconclusive"});
                    emit_doc(ctx, sink, &doc, "search budget exceeded\n".into());
                    Ok(EXIT_INCONCLUSIVE)
                }
            }
        }
        ColorMode::DelsarteClique => {
            match coloring::find_delsarte_clique(g, ctx.budget).map_err(|e| e.to_string())? {
                DelsarteOutcome::Found { clique, alpha } => {
                    let doc = json!({
                        "mode": "delsarte-clique", "outcome": "found",
                        "clique": clique, "alpha": alpha,
                    });
                    Ok(emit_doc(ctx, sink, &doc, format!("delsarte clique {clique:?}, alpha = {alpha}\n")))
                }
                DelsarteOutcome::Absent { reason } => {
                    let doc = json!({"mode": "delsarte-clique", "outcome": "absent", "reason": reason});
                    Ok(emit_doc(ctx, sink, &doc, format!("no delsarte clique: {reason}\n")))
                }
                DelsarteOutcome::Inconclusive => {
                    let doc = json!({"mode": "delsarte-clique", "outcome": "inconclusive"});
                    emit_doc(ctx, sink, &doc, "search budget exceeded\n".into());
                    Ok(EXIT_INCONCLUSIVE)
                }
            }
        }
    }
}

fn emit_doc(ctx: &Ctx, sink: &mut dyn Write, doc: &Json, text: String) -> i32 {
    if ctx.format == Format::Json {
        ctx.emit_json(sink, doc)
    } else {
        ctx.emit(sink, text)
    }
}

fn theta_cmd(
    g: &Graph,
    variant: VariantArg,
    ctx: &Ctx,
    sink: &mut dyn Write,
) -> Result<i32, String> {
    let v = match variant {
        VariantArg::Theta => ThetaVariant::Theta,
        VariantArg::ThetaPrime => ThetaVariant::ThetaPrime,
    };
    match theta::lovasz_theta::<f64>(g, v, ctx.tol) {
        Ok(r) => {
            let doc = json!({
                "variant": match variant { VariantArg::Theta => "theta", VariantArg::ThetaPrime => "theta-prime" },
                "value": r.value,
                "primal_value": r.primal_value,
                "dual_value": r.dual_value,
                "gap": r.gap,
                "iterations": r.iterations,
            });
            Ok(emit_doc(ctx, sink, &doc, format!(
                "theta = {:.6} (certified in [{:.6}, {:.6}], {} iterations)\n",
                r.value, r.primal_value, r.dual_value, r.iterations
            )))
        }
        Err(theta::ThetaError::NonConvergence { gap, primal, dual }) => {
            let _ = writeln!(
                sink,
                "solver did not converge: gap {gap:.3e}, residuals {primal:.3e}/{dual:.3e}"
            );
            Ok(EXIT_INCONCLUSIVE)
        }
        Err(e) => Err(e.to_string()),
    }
}

fn sandwich(g: &Graph, ctx: &Ctx, sink: &mut dyn Write) -> Result<i32, String> {
    let rep = theta::sandwich_report(g, ctx.tol, ctx.budget).map_err(|e| e.to_string())?;
    let doc = serde_json::to_value(&rep).unwrap();
    let chi_text = if rep.chi_exact {
        format!("{}", rep.chi_upper)
    } else {
        format!("[{}, {}]", rep.chi_lower, rep.chi_upper)
    };
    Ok(emit_doc(ctx, sink, &doc, format!(
        "h = {:.6}, chi_v = {:.6}, chi_sv = {:.6}, chi = {}\nchain h <= chi_v <= chi_sv <= chi: {}\n",
        rep.h, rep.chi_v, rep.chi_sv, chi_text,
        if rep.chain_holds { "holds" } else { "VIOLATED" }
    )))
}

fn witness(g: &Graph, ctx: &Ctx, sink: &mut dyn Write) -> Result<i32, String> {
    match vector::non_uvc_witness::<f64>(g, ctx.tol.min(1e-5), ctx.budget) {
        Ok(w) => {
            if ctx.format == Format::Csv {
                let mut text = String::from("coloring,vertex,coordinates...\n");
                for (label, vc) in [("simplex", &w.simplex), ("canonical", &w.canonical)] {
                    for (v, vec) in vc.vectors.iter().enumerate() {
                        let coords: Vec<String> =
                            vec.iter().map(|x| format!("{x:.12}")).collect();
                        text += &format!("{label},{v},{}\n", coords.join(","));
                    }
                }
                return Ok(ctx.emit(sink, text));
            }
            let doc = json!({
                "outcome": "witness",
                "pair": [w.pair.0, w.pair.1],
                "gram_simplex": w.gram_simplex,
                "gram_canonical": w.gram_canonical,
                "target": w.simplex.target,
                "simplex_vectors": w.simplex.vectors,
                "canonical_vectors": w.canonical.vectors,
            });
            Ok(emit_doc(ctx, sink, &doc, format!(
                "not uniquely vector colorable: distance-2 pair ({}, {}) has gram {} (simplex) vs {:.6} (canonical)\n",
                w.pair.0, w.pair.1, w.gram_simplex, w.gram_canonical
            )))
        }
        Err(vector::VectorError::Inconclusive) => {
            let _ = writeln!(sink, "search budget exceeded");
            Ok(EXIT_INCONCLUSIVE)
        }
        Err(e) => Err(e.to_string()),
    }
}

fn searchsrg(nmax: usize, hmax: f64, ctx: &Ctx, sink: &mut dyn Write) -> Result<i32, String> {
    let found = params::srg_param_search(nmax, hmax).map_err(|e| e.to_string())?;
    if ctx.format == Format::Json {
        let rows: Vec<Json> = found
            .iter()
            .map(|c| {
                json!({
                    "n": c.n, "k": c.k, "a": c.a, "c": c.c,
                    "s": c.geometric.s.to_string(),
                    "t": c.geometric.t.to_string(),
                    "alpha": c.geometric.alpha.to_string(),
                    "h": c.hoffman_number.to_string(),
                    "classification": serde_json::to_value(c.geometric.classification).unwrap(),
                })
            })
            .collect();
        return Ok(ctx.emit_json(sink, &Json::Array(rows)));
    }
    let mut text = String::from("n,k,a,c,s,t,alpha,h,classification\n");
    for c in &found {
        text += &format!(
            "{},{},{},{},{},{},{},{},{}\n",
            c.n,
            c.k,
            c.a,
            c.c,
            c.geometric.s,
            c.geometric.t,
            c.geometric.alpha,
            c.hoffman_number,
            c.geometric.classification
        );
    }
    Ok(ctx.emit(sink, text))
}

fn survey_cmd(
    check: &str,
    nmax: usize,
    corpus: Option<PathBuf>,
    ctx: &Ctx,
    sink: &mut dyn Write,
) -> Result<i32, String> {
    let check = survey::CheckId::parse(check).map_err(|e| e.to_string())?;
    let mut options = survey::CampaignOptions {
        jobs: ctx.jobs,
        budget: ctx.budget,
        ..Default::default()
    };
    if let Some(path) = &corpus {
        let (graphs, diagnostics) =
            survey::ingest_corpus_file(path).map_err(|e| e.to_string())?;
        for d in &diagnostics {
            let _ = writeln!(sink, "corpus line {}: {}", d.line, d.message);
        }
        options.corpus = Some(graphs);
    }
    let result = survey::run_campaign(check, nmax, &options).map_err(|e| e.to_string())?;
    let report = serde_json::to_value(&result).unwrap();
    let code = ctx.emit_json(sink, &report);
    if code != EXIT_OK {
        return Ok(code);
    }
    let _ = writeln!(
        sink,
        "campaign {}: scanned {}, violations {}, equalities {} ({} ms)",
        result.campaign,
        result.scanned,
        result.violations.len(),
        result.equalities.len(),
        result.runtime_ms
    );
    Ok(if result.passed() { EXIT_OK } else { EXIT_DOMAIN })
}

fn catalog_cmd(ctx: &Ctx, sink: &mut dyn Write) -> Result<i32, String> {
    let entries = graph::catalog();
    if ctx.format == Format::Json {
        let rows: Vec<Json> = entries
            .iter()
            .map(|e| {
                let mut row = json!({
                    "name": e.name,
                    "n": e.graph.n(),
                    "edges": e.graph.edge_count(),
                    "regularity": serde_json::to_value(&e.class).unwrap(),
                });
                if let Ok(h) = params::hoffman_number(&e.graph) {
                    row["hoffman_number"] = value_json(&h);
                }
                if let Ok(geo) = params::geometric_params_of(&e.graph) {
                    row["geometric"] = json!({
                        "s": geo.s.to_string(), "t": geo.t.to_string(),
                        "alpha": geo.alpha.to_string(),
                        "classification": serde_json::to_value(geo.classification).unwrap(),
                    });
                }
                row
            })
            .collect();
        return Ok(ctx.emit_json(sink, &Json::Array(rows)));
    }
    let mut text =
        String::from("name            n   k   class             h           geometric\n");
    for e in &entries {
        let class = match e.class.srg_params() {
            Some((n, k, a, c)) => format!("srg({n},{k},{a},{c})"),
            None => format!("{:?}", e.class.kind),
        };
        let h = params::hoffman_number(&e.graph)
            .map(|h| match h.exact_string() {
                Some(s) => s,
                None => format!("{:.6}", h.to_f64()),
            })
            .unwrap_or_else(|_| "-".into());
        let geo = params::geometric_params_of(&e.graph)
            .map(|g| format!("({}, {}, {}) {}", g.s, g.t, g.alpha, g.classification))
            .unwrap_or_else(|_| "-".into());
        text += &format!(
            "{:<15} {:<3} {:<3} {:<17} {:<11} {}\n",
            e.name,
            e.graph.n(),
            e.class.k.map(|k| k.to_string()).unwrap_or_else(|| "-".into()),
            class,
            h,
            geo
        );
    }
    Ok(ctx.emit(sink, text))
}
