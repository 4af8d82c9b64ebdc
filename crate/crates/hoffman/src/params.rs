//! The three interchangeable parameter systems of a strongly regular graph
//! (combinatorial, spectral, geometric), the average parameters of a general
//! regular graph, and the closed-form bounds built from them.

use serde::Serialize;

use crate::coloring;
use crate::exact::{quadratic_roots, QuadraticNumber, Rational};
use crate::graph::{
    classify_regularity, common_neighbor_profile, Graph, RegularityClass, RegularityKind,
};
use crate::spectral::{self, srg_exact_eigenvalues};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ParamsError {
    #[error("Hoffman number undefined: graph has no edges")]
    EmptyGraph,
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph is complete")]
    CompleteGraph,
    #[error("eigenvalue data is not from a primitive strongly regular graph")]
    ImprimitiveEigenvalues,
    #[error("geometric parameters are infeasible: {0}")]
    InfeasibleGeometric(String),
    #[error("complement would be imprimitive (alpha = s)")]
    ComplementImprimitive,
    #[error("no unique positive root")]
    NoPositiveRoot,
    #[error("search bounds out of range: {0}")]
    SearchOutOfRange(String),
    #[error(transparent)]
    Spectral(#[from] spectral::SpectralError),
}

/// A real quantity that is exact whenever strongly regular structure makes
/// it so, and a float otherwise.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Exact(QuadraticNumber),
    Approx(f64),
}

impl Value {
    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Exact(q) => q.to_f64(),
            Value::Approx(x) => *x,
        }
    }

    pub fn as_exact(&self) -> Option<&QuadraticNumber> {
        match self {
            Value::Exact(q) => Some(q),
            Value::Approx(_) => None,
        }
    }

    /// The nearest integer if the value sits within `tol` of one (exact
    /// values must be exactly integral).
    pub fn nearest_integer_within(&self, tol: f64) -> Option<i64> {
        match self {
            Value::Exact(q) => q.as_integer(),
            Value::Approx(x) => {
                let r = x.round();
                ((x - r).abs() <= tol).then_some(r as i64)
            }
        }
    }

    pub fn exact_string(&self) -> Option<String> {
        self.as_exact().map(|q| q.to_string())
    }
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Value::Exact(q) => write!(f, "{q}"),
            Value::Approx(x) => write!(f, "{x}"),
        }
    }
}

/// Exact spectral data of a non-complete strongly regular graph.
#[derive(Debug, Clone)]
pub struct SrgData {
    pub n: usize,
    pub k: usize,
    pub a: usize,
    pub c: usize,
    pub theta: QuadraticNumber,
    pub tau: QuadraticNumber,
    pub primitive: bool,
}

/// Gathers exact eigenvalue data when the classifier reports a strongly
/// regular graph.
pub fn srg_data(g: &Graph) -> Option<SrgData> {
    srg_data_from_class(&classify_regularity(g))
}

pub fn srg_data_from_class(class: &RegularityClass) -> Option<SrgData> {
    let (n, k, a, c) = class.srg_params()?;
    let (theta, tau) = srg_exact_eigenvalues(n, k, a, c).ok()?;
    Some(SrgData { n, k, a, c, theta, tau, primitive: class.primitive == Some(true) })
}

/// The Hoffman number `h(G) = 1 - λmax/λmin`, exact for strongly regular
/// graphs. Undefined on empty graphs, where `λmin = 0`.
pub fn hoffman_number(g: &Graph) -> Result<Value, ParamsError> {
    if g.edge_count() == 0 {
        return Err(ParamsError::EmptyGraph);
    }
    if let Some(srg) = srg_data(g) {
        let k = QuadraticNumber::from_int(srg.k as i64);
        let h = QuadraticNumber::one() - k / srg.tau;
        return Ok(Value::Exact(h));
    }
    if g.is_complete() {
        // λmax = n-1, λmin = -1
        return Ok(Value::Exact(QuadraticNumber::from_int(g.n() as i64)));
    }
    let spec = spectral::spectrum::<f64>(g, crate::DEFAULT_TOL)?;
    Ok(Value::Approx(1.0 - spec.lambda_max() / spec.lambda_min()))
}

/// The smallest adjacency eigenvalue, exact for strongly regular graphs.
pub fn min_eigenvalue(g: &Graph) -> Result<Value, ParamsError> {
    if let Some(srg) = srg_data(g) {
        return Ok(Value::Exact(srg.tau));
    }
    if g.is_complete() && g.n() >= 2 {
        return Ok(Value::Exact(QuadraticNumber::from_int(-1)));
    }
    let spec = spectral::spectrum::<f64>(g, crate::DEFAULT_TOL)?;
    Ok(Value::Approx(spec.lambda_min()))
}

/// Rationality classes of the geometric parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GeometricClass {
    /// Conference graphs: irrational eigenvalues.
    #[serde(rename = "irrational")]
    Irrational,
    #[serde(rename = "rational-non-integral")]
    RationalNonIntegral,
    /// All of s, t, α are positive integers; equivalently h is integral.
    #[serde(rename = "pseudo-geometric")]
    PseudoGeometric,
}

impl std::fmt::Display for GeometricClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            GeometricClass::Irrational => "irrational",
            GeometricClass::RationalNonIntegral => "rational-non-integral",
            GeometricClass::PseudoGeometric => "pseudo-geometric",
        };
        write!(f, "{s}")
    }
}

/// The geometric parameters `(s, t, α) = (-k/τ, -τ-1, -k/τ-θ)` of a
/// primitive strongly regular graph.
#[derive(Debug, Clone, PartialEq)]
pub struct GeometricParams {
    pub s: QuadraticNumber,
    pub t: QuadraticNumber,
    pub alpha: QuadraticNumber,
    pub classification: GeometricClass,
}

impl GeometricParams {
    /// `h = s + 1`.
    pub fn hoffman_number(&self) -> QuadraticNumber {
        self.s + QuadraticNumber::one()
    }

    pub fn is_pseudo_geometric(&self) -> bool {
        self.classification == GeometricClass::PseudoGeometric
    }
}

/// Derives the geometric parameters from exact primitive eigenvalue data
/// (`τ < -1 < 0 < θ`).
pub fn geometric_params(
    k: usize,
    theta: QuadraticNumber,
    tau: QuadraticNumber,
) -> Result<GeometricParams, ParamsError> {
    let minus_one = QuadraticNumber::from_int(-1);
    if tau.try_cmp(&minus_one) != Some(std::cmp::Ordering::Less) || !theta.is_positive() {
        return Err(ParamsError::ImprimitiveEigenvalues);
    }
    let k = QuadraticNumber::from_int(k as i64);
    let s = (k / tau).neg();
    let t = minus_one - tau;
    let alpha = s - theta;
    let classification = if !tau.is_rational() {
        GeometricClass::Irrational
    } else if s.is_integer() {
        debug_assert!(t.is_integer() && alpha.is_integer(), "trichotomy");
        GeometricClass::PseudoGeometric
    } else {
        GeometricClass::RationalNonIntegral
    };
    Ok(GeometricParams { s, t, alpha, classification })
}

/// Geometric parameters straight from a graph, when it is a primitive
/// strongly regular graph.
pub fn geometric_params_of(g: &Graph) -> Result<GeometricParams, ParamsError> {
    let srg = srg_data(g).ok_or(ParamsError::ImprimitiveEigenvalues)?;
    if !srg.primitive {
        return Err(ParamsError::ImprimitiveEigenvalues);
    }
    geometric_params(srg.k, srg.theta, srg.tau)
}

/// The combinatorial tuple of a (pseudo-)geometric parameter set:
/// `(n, k, a, c) = ((s+1)(st+α)/α, s(t+1), s-1+t(α-1), α(t+1))`.
/// All four must come out nonnegative integers.
pub fn geometric_to_combinatorial(
    s: QuadraticNumber,
    t: QuadraticNumber,
    alpha: QuadraticNumber,
) -> Result<(i64, i64, i64, i64), ParamsError> {
    if !s.is_positive() || !t.is_positive() || !alpha.is_positive() {
        return Err(ParamsError::InfeasibleGeometric("s, t, alpha must be positive".into()));
    }
    let one = QuadraticNumber::one();
    let n = (s + one) * (s * t + alpha) / alpha;
    let k = s * (t + one);
    let a = s - one + t * (alpha - one);
    let c = alpha * (t + one);
    let as_int = |x: QuadraticNumber, name: &str| {
        x.as_integer()
            .ok_or_else(|| ParamsError::InfeasibleGeometric(format!("{name} = {x} not integral")))
    };
    let tuple = (as_int(n, "n")?, as_int(k, "k")?, as_int(a, "a")?, as_int(c, "c")?);
    if tuple.0 < 1 || tuple.1 < 1 || tuple.2 < 0 || tuple.3 < 0 {
        return Err(ParamsError::InfeasibleGeometric(format!("negative entry in {tuple:?}")));
    }
    Ok(tuple)
}

/// Geometric parameters of the complement:
/// `(s̄, t̄, ᾱ) = (st/α, s-α, t(s-α)/α)`.
pub fn complement_geometric(
    s: QuadraticNumber,
    t: QuadraticNumber,
    alpha: QuadraticNumber,
) -> Result<(QuadraticNumber, QuadraticNumber, QuadraticNumber), ParamsError> {
    if s == alpha {
        return Err(ParamsError::ComplementImprimitive);
    }
    let s_bar = s * t / alpha;
    let t_bar = s - alpha;
    let alpha_bar = t * (s - alpha) / alpha;
    Ok((s_bar, t_bar, alpha_bar))
}

/// The average parameters of a regular, non-empty, non-complete graph:
/// exact rational common-neighbor averages and the exact roots of
/// `x² + (c̄-ā)x + (c̄-k)`.
#[derive(Debug, Clone)]
pub struct AverageParams {
    pub n: usize,
    pub k: usize,
    pub a_bar: Rational,
    pub c_bar: Rational,
    pub tau_bar: QuadraticNumber,
    pub theta_bar: QuadraticNumber,
    /// `s̄ = -k/τ̄ > 0`.
    pub s_bar: QuadraticNumber,
}

pub fn average_params(g: &Graph) -> Result<AverageParams, ParamsError> {
    let k = g.regular_valency().ok_or(ParamsError::NotRegular)?;
    if g.is_empty_graph() {
        return Err(ParamsError::EmptyGraph);
    }
    if g.is_complete() {
        return Err(ParamsError::CompleteGraph);
    }
    let profile = common_neighbor_profile(g);
    let a_bar = profile.a_bar().expect("non-empty graph has edges");
    let c_bar = profile.c_bar().expect("non-complete graph has non-adjacent pairs");
    let kq = Rational::from_integer(k as i64);
    let (tau_bar, theta_bar) = crate::exact::monic_quadratic_roots(c_bar - a_bar, c_bar - kq)
        .expect("average discriminant is nonnegative");
    debug_assert!(tau_bar.is_negative());
    let s_bar = (QuadraticNumber::from_int(k as i64) / tau_bar).neg();
    Ok(AverageParams { n: g.n(), k, a_bar, c_bar, tau_bar, theta_bar, s_bar })
}

/// `s̄` recovered from the edge data alone, as the unique positive root of
/// `(n+ā-2k)x² + (k²-k+ā-ān)x - k(n-k-1)`. Agrees exactly with
/// [`average_params`] via the counting identity.
pub fn s_bar_from_edge_data(
    n: usize,
    k: usize,
    a_bar: Rational,
) -> Result<QuadraticNumber, ParamsError> {
    let (nq, kq) = (Rational::from_integer(n as i64), Rational::from_integer(k as i64));
    let lead = nq + a_bar - kq * Rational::from_integer(2);
    let lin = kq * kq - kq + a_bar - a_bar * nq;
    let cst = -kq * (nq - kq - Rational::from_integer(1));
    let (lo, hi) =
        quadratic_roots(lead, lin, cst).map_err(|_| ParamsError::NoPositiveRoot)?;
    match (lo.is_positive(), hi.is_positive()) {
        (false, true) => Ok(hi),
        (true, true) if lo == hi => Ok(hi),
        (true, false) => Ok(lo),
        _ => Err(ParamsError::NoPositiveRoot),
    }
}

/// One entry of a [`BoundReport`]: the bound value when its hypothesis
/// applies, or the reason it does not.
#[derive(Debug, Clone, Serialize)]
pub struct Entry<V: Serialize> {
    pub applicable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<V>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl<V: Serialize> Entry<V> {
    fn yes(value: V) -> Self {
        Entry { applicable: true, value: Some(value), reason: None }
    }

    fn no(reason: impl Into<String>) -> Self {
        Entry { applicable: false, value: None, reason: Some(reason.into()) }
    }

    pub fn value(&self) -> Option<&V> {
        self.value.as_ref()
    }
}

/// A reported numeric value: float plus the exact form when one exists.
#[derive(Debug, Clone, Serialize)]
pub struct Reported {
    pub approx: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
}

impl Reported {
    fn from_value(v: &Value) -> Self {
        Reported { approx: v.to_f64(), exact: v.exact_string() }
    }

    fn from_exact(q: &QuadraticNumber) -> Self {
        Reported { approx: q.to_f64(), exact: Some(q.to_string()) }
    }

    fn from_f64(x: f64) -> Self {
        Reported { approx: x, exact: None }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TriangleBoundEntry {
    /// Lower bound on the triangle count.
    pub bound: Reported,
    /// Actual triangle count.
    pub actual: u64,
    pub chi: usize,
    pub equality: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProductEntry {
    pub h: Reported,
    pub h_complement: Reported,
    pub product: f64,
    /// `n - h(G)h(Ḡ)`; nonnegative for regular graphs.
    pub slack: f64,
}

/// Every closed-form bound this crate knows, evaluated on one graph. Each
/// entry is gated by its own hypothesis.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    /// `χ ≥ h(G)`.
    pub hoffman_number: Entry<Reported>,
    /// Ratio bound `α(G) ≤ n·λmin/(λmin-k)` (regular graphs).
    pub ratio_bound_independence: Entry<Reported>,
    /// `χ ≥ n/α(G)` with the exact independence number.
    pub classic_chromatic_bound: Entry<Reported>,
    /// Neumaier bound `ω ≤ s̄+1` (edge-regular graphs).
    pub neumaier_clique_bound: Entry<Reported>,
    /// `χ ≥ s̄+1` (co-edge-regular graphs); improves the Hoffman bound off
    /// the strongly regular case.
    pub coedge_chromatic_bound: Entry<Reported>,
    /// Triangle-count lower bound (Hoffman colorable regular graphs).
    pub triangle_bound: Entry<TriangleBoundEntry>,
    /// `h(G)h(Ḡ) ≤ n`, equality exactly on strongly regular graphs.
    pub hoffman_product: Entry<ProductEntry>,
}

/// Evaluates every applicable bound on `g`. `budget` caps the exact
/// clique/chromatic searches used for the independence-number and triangle
/// entries.
pub fn bound_report(g: &Graph, budget: u64) -> BoundReport {
    let class = classify_regularity(g);
    let h = hoffman_number(g);
    let avg = average_params(g);

    let hoffman_entry = match &h {
        Ok(v) => Entry::yes(Reported::from_value(v)),
        Err(e) => Entry::no(e.to_string()),
    };

    let ratio_entry = match (&h, class.k) {
        (_, None) => Entry::no("graph is irregular"),
        (Err(e), _) => Entry::no(e.to_string()),
        (Ok(_), Some(k)) => {
            let lam_min = min_eigenvalue(g).expect("non-empty").to_f64();
            Entry::yes(Reported::from_f64(g.n() as f64 * lam_min / (lam_min - k as f64)))
        }
    };

    let independence = coloring::max_clique(&g.complement(), budget);
    let classic_entry = match &independence {
        coloring::CliqueOutcome::Exact { size, .. } if *size > 0 => {
            Entry::yes(Reported::from_f64(g.n() as f64 / *size as f64))
        }
        coloring::CliqueOutcome::Exact { .. } => Entry::no("graph has no vertices"),
        coloring::CliqueOutcome::Interval { .. } => Entry::no("independence search exceeded budget"),
    };

    let neumaier_entry = match (&avg, class.kind) {
        (Ok(avg), RegularityKind::EdgeRegular | RegularityKind::StronglyRegular) => {
            let bound = avg.s_bar + QuadraticNumber::one();
            Entry::yes(Reported::from_exact(&bound))
        }
        _ => Entry::no("graph is not edge-regular"),
    };

    let coedge_entry = match (&avg, class.kind) {
        (Ok(avg), RegularityKind::CoEdgeRegular | RegularityKind::StronglyRegular) => {
            let bound = avg.s_bar + QuadraticNumber::one();
            Entry::yes(Reported::from_exact(&bound))
        }
        _ => Entry::no("graph is not co-edge-regular"),
    };

    let triangle_entry = triangle_bound_entry(g, &class, &h, budget);

    let product_entry = if class.k.is_none() {
        Entry::no("graph is irregular")
    } else {
        match &h {
            Err(e) => Entry::no(e.to_string()),
            Ok(hv) => {
                if g.is_complete() {
                    Entry::no("graph is complete")
                } else {
                    let hc = hoffman_number(&g.complement()).expect("complement non-empty");
                    let product = hv.to_f64() * hc.to_f64();
                    // for regular graphs the product never exceeds n
                    debug_assert!(product <= g.n() as f64 + 1e-7);
                    Entry::yes(ProductEntry {
                        h: Reported::from_value(hv),
                        h_complement: Reported::from_value(&hc),
                        product,
                        slack: g.n() as f64 - product,
                    })
                }
            }
        }
    };

    BoundReport {
        hoffman_number: hoffman_entry,
        ratio_bound_independence: ratio_entry,
        classic_chromatic_bound: classic_entry,
        neumaier_clique_bound: neumaier_entry,
        coedge_chromatic_bound: coedge_entry,
        triangle_bound: triangle_entry,
        hoffman_product: product_entry,
    }
}

fn triangle_bound_entry(
    g: &Graph,
    class: &RegularityClass,
    h: &Result<Value, ParamsError>,
    budget: u64,
) -> Entry<TriangleBoundEntry> {
    let Some(k) = class.k else {
        return Entry::no("graph is irregular");
    };
    let Ok(h) = h else {
        return Entry::no("graph is empty");
    };
    if g.is_complete() {
        return Entry::no("graph is complete");
    }
    let Some(h_int) = h.nearest_integer_within(1e-7) else {
        return Entry::no("graph is not Hoffman colorable (h not integral)");
    };
    let chi = match coloring::chromatic_number(g, budget) {
        coloring::ChromaticOutcome::Exact { chi, .. } => chi,
        coloring::ChromaticOutcome::Interval { .. } => {
            return Entry::no("chromatic search exceeded budget")
        }
    };
    if chi as i64 != h_int {
        return Entry::no("graph is not Hoffman colorable (chi > h)");
    }
    // N ≥ (kn/6)(χ-1 + (k-χ)(k-χ+1)/(n-χ) - k(n-k-1)/((n-χ)(χ-1)))
    let (nq, kq, cq) = (
        Rational::from_integer(g.n() as i64),
        Rational::from_integer(k as i64),
        Rational::from_integer(chi as i64),
    );
    let one = Rational::from_integer(1);
    let bound = kq * nq / Rational::from_integer(6)
        * (cq - one + (kq - cq) * (kq - cq + one) / (nq - cq)
            - kq * (nq - kq - one) / ((nq - cq) * (cq - one)));
    let actual = g.triangle_count();
    let bound_f = *bound.numer() as f64 / *bound.denom() as f64;
    let equality = Rational::from_integer(actual as i64) == bound;
    Entry::yes(TriangleBoundEntry {
        bound: Reported { approx: bound_f, exact: Some(bound.to_string()) },
        actual,
        chi,
        equality,
    })
}

/// A feasible strongly regular parameter set found by the search.
#[derive(Debug, Clone)]
pub struct SrgCandidate {
    pub n: i64,
    pub k: i64,
    pub a: i64,
    pub c: i64,
    pub theta: QuadraticNumber,
    pub tau: QuadraticNumber,
    pub multiplicities: (i64, i64),
    pub geometric: GeometricParams,
    pub hoffman_number: QuadraticNumber,
}

/// Enumerates all primitive strongly regular parameter tuples with
/// `n ≤ n_max` and Hoffman number at most `h_max`, filtered by the counting
/// identity, eigenvalue integrality (or the conference condition),
/// multiplicity integrality and the Krein conditions.
pub fn srg_param_search(n_max: usize, h_max: f64) -> Result<Vec<SrgCandidate>, ParamsError> {
    if n_max > 200 {
        return Err(ParamsError::SearchOutOfRange(format!("n_max = {n_max} > 200")));
    }
    if !(h_max > 1.0) {
        return Err(ParamsError::SearchOutOfRange(format!("h_max = {h_max} must exceed 1")));
    }
    let mut out = Vec::new();
    for n in 5..=(n_max as i64) {
        for k in 2..(n - 1) {
            for a in 0..=(k - 2) {
                // c is forced by c(n-k-1) = k(k-a-1)
                let rhs = k * (k - a - 1);
                if rhs % (n - k - 1) != 0 {
                    continue;
                }
                let c = rhs / (n - k - 1);
                if c < 1 || c >= k {
                    continue; // imprimitive
                }
                if let Some(cand) = examine_tuple(n, k, a, c, h_max) {
                    out.push(cand);
                }
            }
        }
    }
    Ok(out)
}

fn examine_tuple(n: i64, k: i64, a: i64, c: i64, h_max: f64) -> Option<SrgCandidate> {
    let d = (a - c) * (a - c) + 4 * (k - c);
    debug_assert!(d > 0);
    let sqrt_d = (d as f64).sqrt() as i64;
    let is_square = (sqrt_d * sqrt_d == d) || ((sqrt_d + 1) * (sqrt_d + 1) == d);
    let sqrt_d = if sqrt_d * sqrt_d == d { sqrt_d } else { sqrt_d + 1 };
    let num = 2 * k + (n - 1) * (a - c);

    let multiplicities = if is_square {
        // integral eigenvalues: multiplicities ((n-1) ∓ num/√D)/2
        if num % sqrt_d != 0 {
            return None;
        }
        let q = num / sqrt_d;
        if (n - 1 - q) % 2 != 0 {
            return None;
        }
        let m_theta = (n - 1 - q) / 2;
        let m_tau = (n - 1 + q) / 2;
        if m_theta < 1 || m_tau < 1 {
            return None;
        }
        (m_theta, m_tau)
    } else {
        // conference case: equal multiplicities force 2k + (n-1)(a-c) = 0
        if num != 0 || (n - 1) % 2 != 0 {
            return None;
        }
        ((n - 1) / 2, (n - 1) / 2)
    };

    let (theta, tau) = srg_exact_eigenvalues(n as usize, k as usize, a as usize, c as usize)
        .expect("identity-checked tuple");

    // Krein conditions, exact
    let one = QuadraticNumber::one();
    let kq = QuadraticNumber::from_int(k);
    let two = QuadraticNumber::from_int(2);
    let q1_lhs = (theta + one) * (kq + theta + two * theta * tau);
    let q1_rhs = (kq + theta) * (tau + one) * (tau + one);
    let q2_lhs = (tau + one) * (kq + tau + two * theta * tau);
    let q2_rhs = (kq + tau) * (theta + one) * (theta + one);
    if q1_lhs.try_cmp(&q1_rhs) == Some(std::cmp::Ordering::Greater)
        || q2_lhs.try_cmp(&q2_rhs) == Some(std::cmp::Ordering::Greater)
    {
        return None;
    }

    let geometric = geometric_params(k as usize, theta, tau).ok()?;
    let h = geometric.hoffman_number();
    if h.to_f64() > h_max + 1e-12 {
        return None;
    }
    Some(SrgCandidate {
        n,
        k,
        a,
        c,
        theta,
        tau,
        multiplicities,
        geometric,
        hoffman_number: h,
    })
}
