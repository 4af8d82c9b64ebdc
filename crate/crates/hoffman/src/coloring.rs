//! Exact clique, coclique and chromatic computations, Hoffman-coloring
//! certificates and search, Delsarte cliques and spreads.
//!
//! All searches are exhaustive within an explicit node budget; "certified
//! absence" and "budget exceeded" are distinct outcomes.

use serde::Serialize;

use crate::graph::Graph;
use crate::params;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ColoringError {
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph is not connected")]
    Disconnected,
    #[error("vertex set is not a coclique: {0} and {1} are adjacent")]
    NotCoclique(usize, usize),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("graph is not a primitive strongly regular graph")]
    NotPrimitiveSrg,
    #[error("coloring is not proper: edge ({0}, {1}) is monochromatic")]
    NotProper(usize, usize),
    #[error("coloring has an empty or out-of-range class")]
    MalformedColoring,
    #[error(transparent)]
    Params(#[from] params::ParamsError),
}

/// A proper vertex coloring: `assignment[v]` is the class of `v`, classes
/// are `0..num_classes`, all nonempty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coloring {
    pub assignment: Vec<usize>,
    pub num_classes: usize,
}

impl Coloring {
    /// Validates properness and class numbering against `g`.
    pub fn new(g: &Graph, assignment: Vec<usize>) -> Result<Self, ColoringError> {
        if assignment.len() != g.n() {
            return Err(ColoringError::MalformedColoring);
        }
        let num_classes = assignment.iter().map(|&c| c + 1).max().unwrap_or(0);
        let mut seen = vec![false; num_classes];
        for &c in &assignment {
            seen[c] = true;
        }
        if seen.iter().any(|&s| !s) {
            return Err(ColoringError::MalformedColoring);
        }
        for (u, v) in g.edges() {
            if assignment[u] == assignment[v] {
                return Err(ColoringError::NotProper(u, v));
            }
        }
        Ok(Self { assignment, num_classes })
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.num_classes];
        for (v, &c) in self.assignment.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        g.edges().all(|(u, v)| self.assignment[u] != self.assignment[v])
    }
}

/// Result of the exact maximum-clique search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliqueOutcome {
    Exact { size: usize, witness: Vec<usize> },
    /// Budget exceeded: the clique number lies in `lower..=upper` and
    /// `witness` attains `lower`.
    Interval { lower: usize, upper: usize, witness: Vec<usize> },
}

impl CliqueOutcome {
    pub fn exact_size(&self) -> Option<usize> {
        match self {
            CliqueOutcome::Exact { size, .. } => Some(*size),
            CliqueOutcome::Interval { .. } => None,
        }
    }

    pub fn witness(&self) -> &[usize] {
        match self {
            CliqueOutcome::Exact { witness, .. } | CliqueOutcome::Interval { witness, .. } => {
                witness
            }
        }
    }
}

struct CliqueSearch<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl CliqueSearch<'_> {
    /// Greedy-colors `candidates` (in order) and returns them sorted by
    /// color class; a vertex of color `c` can extend a clique by at most
    /// `c+1` more vertices.
    fn color_order(&self, candidates: &[usize]) -> Vec<(usize, usize)> {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &v in candidates {
            match classes
                .iter_mut()
                .find(|cls| cls.iter().all(|&w| !self.g.has_edge(v, w)))
            {
                Some(cls) => cls.push(v),
                None => classes.push(vec![v]),
            }
        }
        let mut out = Vec::with_capacity(candidates.len());
        for (color, cls) in classes.iter().enumerate() {
            for &v in cls {
                out.push((v, color + 1));
            }
        }
        out
    }

    /// Tomita-style expansion. Returns false when the budget ran out.
    fn expand(&mut self, candidates: &[usize]) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            return false;
        }
        if candidates.is_empty() {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return true;
        }
        let ordered = self.color_order(candidates);
        for idx in (0..ordered.len()).rev() {
            let (v, bound) = ordered[idx];
            if self.current.len() + bound <= self.best.len() {
                return true; // all earlier vertices have smaller bounds
            }
            let next: Vec<usize> = ordered[..idx]
                .iter()
                .map(|&(w, _)| w)
                .filter(|&w| self.g.has_edge(v, w))
                .collect();
            self.current.push(v);
            let ok = self.expand(&next);
            self.current.pop();
            if !ok {
                return false;
            }
        }
        true
    }
}

/// Exact maximum clique by branch and bound with greedy-coloring upper
/// bounds. Exceeding `budget` search nodes yields an interval instead.
pub fn max_clique(g: &Graph, budget: u64) -> CliqueOutcome {
    if g.n() == 0 {
        return CliqueOutcome::Exact { size: 0, witness: vec![] };
    }
    // order by degree, highest first; stable on index
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut search = CliqueSearch { g, best: vec![], current: vec![], nodes: 0, budget };
    let root_bound = search.color_order(&order).iter().map(|&(_, b)| b).max().unwrap_or(0);
    let complete = search.expand(&order);
    let mut witness = search.best;
    witness.sort_unstable();
    if complete {
        CliqueOutcome::Exact { size: witness.len(), witness }
    } else {
        CliqueOutcome::Interval { lower: witness.len(), upper: root_bound, witness }
    }
}

/// Result of the exact chromatic-number search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChromaticOutcome {
    Exact { chi: usize, witness: Coloring },
    /// Budget exceeded: `lower..=upper` brackets χ and `witness` uses
    /// `upper` colors.
    Interval { lower: usize, upper: usize, witness: Coloring },
}

impl ChromaticOutcome {
    pub fn exact(&self) -> Option<usize> {
        match self {
            ChromaticOutcome::Exact { chi, .. } => Some(*chi),
            ChromaticOutcome::Interval { .. } => None,
        }
    }

    pub fn upper_witness(&self) -> &Coloring {
        match self {
            ChromaticOutcome::Exact { witness, .. }
            | ChromaticOutcome::Interval { witness, .. } => witness,
        }
    }
}

/// DSATUR greedy coloring; a valid upper bound and starting witness.
fn dsatur_greedy(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut color = vec![usize::MAX; n];
    let mut sat: Vec<std::collections::BTreeSet<usize>> = vec![Default::default(); n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == usize::MAX)
            .max_by_key(|&v| (sat[v].len(), g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let c = (0..).find(|c| !sat[v].contains(c)).unwrap();
        color[v] = c;
        for w in g.neighbors(v) {
            sat[w].insert(c);
        }
    }
    color
}

struct KColorSearch<'a> {
    g: &'a Graph,
    k: usize,
    color: Vec<usize>,
    nodes: u64,
    budget: u64,
}

const UNCOLORED: usize = usize::MAX;

impl KColorSearch<'_> {
    /// DSATUR-ordered backtracking. `Some(true)` = colorable (self.color
    /// holds a witness), `Some(false)` = refuted, `None` = budget exceeded.
    fn solve(&mut self, colored: usize, max_used: usize) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        let n = self.g.n();
        if colored == n {
            return Some(true);
        }
        // pick the uncolored vertex with maximum saturation, ties by degree
        // then index
        let mut pick = usize::MAX;
        let mut pick_key = (0usize, 0usize);
        let mut forbidden_of = 0u64;
        for v in 0..n {
            if self.color[v] != UNCOLORED {
                continue;
            }
            let mut forbidden = 0u64;
            for w in self.g.neighbors(v) {
                if self.color[w] != UNCOLORED {
                    forbidden |= 1 << self.color[w];
                }
            }
            let key = (forbidden.count_ones() as usize, self.g.degree(v));
            if pick == usize::MAX || key > pick_key {
                pick = v;
                pick_key = key;
                forbidden_of = forbidden;
            }
        }
        // new classes are opened in index order, which kills class-permutation
        // symmetry
        let limit = (max_used + 1).min(self.k);
        for c in 0..limit {
            if forbidden_of >> c & 1 == 1 {
                continue;
            }
            self.color[pick] = c;
            match self.solve(colored + 1, max_used.max(c + 1)) {
                Some(true) => return Some(true),
                Some(false) => {}
                None => {
                    self.color[pick] = UNCOLORED;
                    return None;
                }
            }
            self.color[pick] = UNCOLORED;
        }
        Some(false)
    }
}

fn try_k_coloring(g: &Graph, k: usize, budget: u64) -> Option<Option<Coloring>> {
    if k > 64 {
        return None; // beyond the bitmask width; degrade to an interval
    }
    let mut search =
        KColorSearch { g, k, color: vec![UNCOLORED; g.n()], nodes: 0, budget };
    match search.solve(0, 0) {
        Some(true) => Some(Some(
            Coloring::new(g, search.color).expect("search produces proper colorings"),
        )),
        Some(false) => Some(None),
        None => None,
    }
}

/// Exact chromatic number by DSATUR-ordered branch and bound, seeded with
/// the clique lower bound and the Hoffman bound `⌈h⌉`.
pub fn chromatic_number(g: &Graph, budget: u64) -> ChromaticOutcome {
    let n = g.n();
    if n == 0 {
        return ChromaticOutcome::Exact {
            chi: 0,
            witness: Coloring { assignment: vec![], num_classes: 0 },
        };
    }
    if g.is_complete() {
        let witness = Coloring::new(g, (0..n).collect()).unwrap();
        return ChromaticOutcome::Exact { chi: n, witness };
    }
    let greedy = Coloring::new(g, dsatur_greedy(g)).expect("greedy coloring is proper");

    let mut lower = 1;
    if let Ok(h) = params::hoffman_number(g) {
        lower = lower.max((h.to_f64() - 1e-9).ceil() as usize);
    }
    match max_clique(g, budget / 4 + 1) {
        CliqueOutcome::Exact { size, .. } | CliqueOutcome::Interval { lower: size, .. } => {
            lower = lower.max(size);
        }
    }

    let mut witness = greedy;
    let mut k = lower;
    while k < witness.num_classes {
        match try_k_coloring(g, k, budget) {
            Some(Some(col)) => {
                witness = col;
                break;
            }
            Some(None) => k += 1,
            None => {
                return ChromaticOutcome::Interval { lower: k, upper: witness.num_classes, witness }
            }
        }
    }
    ChromaticOutcome::Exact { chi: witness.num_classes, witness }
}

/// Enumerates every proper coloring of `g` with exactly `num_classes`
/// classes, one per partition (classes are labeled in order of first use).
/// Intended for the small exhaustive campaigns.
pub fn for_each_coloring(g: &Graph, num_classes: usize, mut f: impl FnMut(&Coloring)) {
    fn rec(
        g: &Graph,
        target: usize,
        v: usize,
        used: usize,
        color: &mut Vec<usize>,
        f: &mut impl FnMut(&Coloring),
    ) {
        let n = g.n();
        if v == n {
            if used == target {
                f(&Coloring { assignment: color.clone(), num_classes: target });
            }
            return;
        }
        // not enough vertices left to open the remaining classes
        if target - used > n - v {
            return;
        }
        let limit = (used + 1).min(target);
        for c in 0..limit {
            if (0..v).any(|w| color[w] == c && g.has_edge(v, w)) {
                continue;
            }
            color[v] = c;
            rec(g, target, v + 1, used.max(c + 1), color, f);
        }
        color[v] = UNCOLORED;
    }
    let mut color = vec![UNCOLORED; g.n()];
    rec(g, num_classes, 0, 0, &mut color, &mut f);
}

/// Evidence that a coclique attains (or misses) the ratio bound.
#[derive(Debug, Clone, Serialize)]
pub struct HoffmanCocliqueCheck {
    pub is_hoffman: bool,
    /// `n·λmin/(λmin - k)`.
    pub ratio_bound: f64,
    pub size: usize,
    /// Outside vertices whose neighbor count into the set differs from
    /// `-λmin`, with their counts.
    pub violators: Vec<(usize, usize)>,
}

/// Checks whether the coclique `set` is a Hoffman coclique of the regular
/// graph `g`: it attains the ratio bound and every outside vertex has
/// exactly `-λmin` neighbors inside.
pub fn is_hoffman_coclique(
    g: &Graph,
    set: &[usize],
) -> Result<HoffmanCocliqueCheck, ColoringError> {
    let k = g.regular_valency().ok_or(ColoringError::NotRegular)?;
    for &v in set {
        if v >= g.n() {
            return Err(ColoringError::VertexOutOfRange(v));
        }
    }
    for (i, &u) in set.iter().enumerate() {
        for &v in &set[i + 1..] {
            if g.has_edge(u, v) {
                return Err(ColoringError::NotCoclique(u, v));
            }
        }
    }
    let lam_min = params::min_eigenvalue(g)?.to_f64();
    let ratio_bound = g.n() as f64 * lam_min / (lam_min - k as f64);
    let m = -lam_min;
    let in_set = {
        let mut mark = vec![false; g.n()];
        for &v in set {
            mark[v] = true;
        }
        mark
    };
    let mut violators = Vec::new();
    for v in 0..g.n() {
        if in_set[v] {
            continue;
        }
        let count = g.neighbors(v).filter(|&w| in_set[w]).count();
        if (count as f64 - m).abs() > 1e-6 {
            violators.push((v, count));
        }
    }
    let size_attains = (set.len() as f64 - ratio_bound).abs() <= 1e-6;
    Ok(HoffmanCocliqueCheck {
        is_hoffman: size_attains && violators.is_empty(),
        ratio_bound,
        size: set.len(),
        violators,
    })
}

/// The equitability evidence of a Hoffman coloring: equal class sizes and
/// every cross-degree equal to `-λmin`.
#[derive(Debug, Clone, Serialize)]
pub struct HoffmanCertificate {
    pub h: usize,
    pub class_size: usize,
    /// `-λmin`, the constant number of neighbors in every foreign class.
    pub cross_degree: usize,
    pub class_members: Vec<Vec<usize>>,
    /// `cross_degrees[v][c]`: neighbors of `v` in class `c` (0 for the own
    /// class).
    pub cross_degrees: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum HoffmanRejection {
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph is not connected")]
    Disconnected,
    #[error("coloring is not proper")]
    ImproperColoring,
    #[error("Hoffman bound not attainable: h = {h} is not integral")]
    NonIntegralHoffman { h: f64 },
    #[error("-lambda_min = {m} is not integral")]
    NonIntegralMinEigenvalue { m: f64 },
    #[error("coloring uses {used} classes but h = {h}")]
    WrongClassCount { used: usize, h: usize },
    #[error("class {class} has size {size}, expected {expected}")]
    UnequalClassSize { class: usize, size: usize, expected: usize },
    #[error("vertex {vertex} has {count} neighbors in class {class}, expected {expected}")]
    CrossDegree { vertex: usize, class: usize, count: usize, expected: usize },
}

/// Verifies that `col` is a Hoffman coloring of `g` and assembles the full
/// cross-degree certificate.
pub fn verify_hoffman_coloring(
    g: &Graph,
    col: &Coloring,
) -> Result<HoffmanCertificate, HoffmanRejection> {
    if g.regular_valency().is_none() {
        return Err(HoffmanRejection::NotRegular);
    }
    if !g.is_connected() {
        return Err(HoffmanRejection::Disconnected);
    }
    if col.assignment.len() != g.n() || !col.is_proper(g) {
        return Err(HoffmanRejection::ImproperColoring);
    }
    let h_value = params::hoffman_number(g).map_err(|_| HoffmanRejection::NotRegular)?;
    let h = h_value
        .nearest_integer_within(1e-7)
        .ok_or(HoffmanRejection::NonIntegralHoffman { h: h_value.to_f64() })? as usize;
    let m_value = params::min_eigenvalue(g).map_err(|_| HoffmanRejection::NotRegular)?;
    let m = -m_value
        .nearest_integer_within(1e-7)
        .ok_or(HoffmanRejection::NonIntegralMinEigenvalue { m: -m_value.to_f64() })?;
    let m = m as usize;
    if col.num_classes != h {
        return Err(HoffmanRejection::WrongClassCount { used: col.num_classes, h });
    }
    let class_members = col.classes();
    let expected = g.n() / h;
    for (class, members) in class_members.iter().enumerate() {
        if members.len() != expected {
            return Err(HoffmanRejection::UnequalClassSize {
                class,
                size: members.len(),
                expected,
            });
        }
    }
    let mut cross_degrees = vec![vec![0usize; h]; g.n()];
    for v in 0..g.n() {
        for w in g.neighbors(v) {
            cross_degrees[v][col.assignment[w]] += 1;
        }
    }
    for v in 0..g.n() {
        for c in 0..h {
            if c == col.assignment[v] {
                continue;
            }
            if cross_degrees[v][c] != m {
                return Err(HoffmanRejection::CrossDegree {
                    vertex: v,
                    class: c,
                    count: cross_degrees[v][c],
                    expected: m,
                });
            }
        }
    }
    Ok(HoffmanCertificate {
        h,
        class_size: expected,
        cross_degree: m,
        class_members,
        cross_degrees,
    })
}

/// Why a Hoffman coloring certifiably does not exist.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum AbsenceReason {
    NonIntegralHoffman { h: f64 },
    ClassSizeNotIntegral { h: usize, n: usize },
    NonIntegralMinEigenvalue { m: f64 },
    SearchExhausted,
}

impl std::fmt::Display for AbsenceReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AbsenceReason::NonIntegralHoffman { h } => {
                write!(f, "Hoffman number {h} is not integral")
            }
            AbsenceReason::ClassSizeNotIntegral { h, n } => {
                write!(f, "h = {h} does not divide n = {n}")
            }
            AbsenceReason::NonIntegralMinEigenvalue { m } => {
                write!(f, "-lambda_min = {m} is not integral")
            }
            AbsenceReason::SearchExhausted => write!(f, "exhaustive search found no coloring"),
        }
    }
}

#[derive(Debug, Clone)]
pub enum HoffmanSearchOutcome {
    Found { coloring: Coloring, certificate: HoffmanCertificate, trivial: bool },
    Absent { reason: AbsenceReason },
    Inconclusive { nodes: u64 },
}

impl HoffmanSearchOutcome {
    pub fn found(&self) -> Option<(&Coloring, &HoffmanCertificate)> {
        match self {
            HoffmanSearchOutcome::Found { coloring, certificate, .. } => {
                Some((coloring, certificate))
            }
            _ => None,
        }
    }

    pub fn is_absent(&self) -> bool {
        matches!(self, HoffmanSearchOutcome::Absent { .. })
    }
}

/// BFS order from vertex 0, ties by index.
fn bfs_order(g: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.n());
    let mut seen = vec![false; g.n()];
    let mut queue = std::collections::VecDeque::from([0usize]);
    seen[0] = true;
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for v in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    order
}

struct HoffmanSearch<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    h: usize,
    cap: usize,
    m: usize,
    color: Vec<usize>,
    class_size: Vec<usize>,
    /// `cnt[v][c]`: neighbors of `v` currently assigned to class `c`.
    cnt: Vec<Vec<usize>>,
    nodes: u64,
    budget: u64,
}

impl HoffmanSearch<'_> {
    /// `Some(true)` found, `Some(false)` exhausted, `None` out of budget.
    fn solve(&mut self, pos: usize, used: usize) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        if pos == self.order.len() {
            return Some(true);
        }
        let v = self.order[pos];
        let limit = (used + 1).min(self.h);
        for c in 0..limit {
            if self.class_size[c] == self.cap || self.cnt[v][c] > 0 {
                continue;
            }
            // tentatively place v in c and propagate the cross-degree cap:
            // any vertex outside c may see at most m neighbors inside
            self.color[v] = c;
            self.class_size[c] += 1;
            let mut touched = 0;
            let mut feasible = true;
            for w in self.g.neighbors(v) {
                self.cnt[w][c] += 1;
                touched += 1;
                if self.cnt[w][c] > self.m && self.color[w] != c {
                    feasible = false;
                    break;
                }
            }
            if feasible {
                match self.solve(pos + 1, used.max(c + 1)) {
                    Some(true) => return Some(true),
                    Some(false) => {}
                    None => {
                        self.undo(v, c, touched);
                        return None;
                    }
                }
            }
            self.undo(v, c, touched);
        }
        Some(false)
    }

    fn undo(&mut self, v: usize, c: usize, touched: usize) {
        for (i, w) in self.g.neighbors(v).enumerate() {
            if i == touched {
                break;
            }
            self.cnt[w][c] -= 1;
        }
        self.class_size[c] -= 1;
        self.color[v] = UNCOLORED;
    }
}

/// Detects the trivially Hoffman colorable cases: connected regular
/// bipartite graphs, and regular complete multipartite graphs (the
/// complement splits into equal-size cliques).
fn trivial_hoffman_coloring(g: &Graph) -> Option<Coloring> {
    if let Some(side) = g.bipartition() {
        if g.edge_count() > 0 {
            return Coloring::new(g, side).ok();
        }
    }
    // complete multipartite: complement components are cliques of one size
    let comp = g.complement();
    let mut class = vec![usize::MAX; g.n()];
    let mut sizes = Vec::new();
    for s in 0..g.n() {
        if class[s] != usize::MAX {
            continue;
        }
        let idx = sizes.len();
        let mut members = vec![s];
        class[s] = idx;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in comp.neighbors(u) {
                if class[v] == usize::MAX {
                    class[v] = idx;
                    members.push(v);
                    queue.push_back(v);
                }
            }
        }
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if !comp.has_edge(u, v) {
                    return None; // component is not a clique
                }
            }
        }
        sizes.push(members.len());
    }
    if sizes.len() < 2 || sizes.iter().any(|&s| s != sizes[0]) {
        return None;
    }
    Coloring::new(g, class).ok()
}

/// Searches for a Hoffman coloring of a connected regular graph.
///
/// Fast rejections (non-integral `h`, `h ∤ n`, non-integral `-λmin`)
/// certify absence immediately; trivial colorings (bipartite, regular
/// complete multipartite) are detected up front; otherwise an exhaustive
/// backtracking search over BFS-ordered vertices runs under three live
/// constraints: class size at most `n/h`, at most `-λmin` neighbors per
/// foreign class, no monochromatic edge.
///
/// Panics on precondition violations (irregular or disconnected input);
/// use [`find_hoffman_coloring_checked`] to surface those as errors.
pub fn find_hoffman_coloring(g: &Graph, budget: u64) -> HoffmanSearchOutcome {
    find_hoffman_coloring_checked(g, budget).expect("regular connected nonempty input")
}

/// As [`find_hoffman_coloring`], but surfacing precondition violations.
pub fn find_hoffman_coloring_checked(
    g: &Graph,
    budget: u64,
) -> Result<HoffmanSearchOutcome, ColoringError> {
    if g.regular_valency().is_none() {
        return Err(ColoringError::NotRegular);
    }
    if !g.is_connected() || g.n() == 0 {
        return Err(ColoringError::Disconnected);
    }
    if g.edge_count() == 0 {
        // K1: the one-class coloring is vacuously Hoffman? h is undefined.
        return Err(ColoringError::Params(params::ParamsError::EmptyGraph));
    }

    let h_value = params::hoffman_number(g)?;
    let Some(h) = h_value.nearest_integer_within(1e-7) else {
        return Ok(HoffmanSearchOutcome::Absent {
            reason: AbsenceReason::NonIntegralHoffman { h: h_value.to_f64() },
        });
    };
    let h = h as usize;
    if g.n() % h != 0 {
        return Ok(HoffmanSearchOutcome::Absent {
            reason: AbsenceReason::ClassSizeNotIntegral { h, n: g.n() },
        });
    }
    let m_value = params::min_eigenvalue(g)?;
    let Some(neg_m) = m_value.nearest_integer_within(1e-7) else {
        return Ok(HoffmanSearchOutcome::Absent {
            reason: AbsenceReason::NonIntegralMinEigenvalue { m: -m_value.to_f64() },
        });
    };
    let m = (-neg_m) as usize;

    if let Some(coloring) = trivial_hoffman_coloring(g) {
        if let Ok(certificate) = verify_hoffman_coloring(g, &coloring) {
            return Ok(HoffmanSearchOutcome::Found { coloring, certificate, trivial: true });
        }
    }

    let mut search = HoffmanSearch {
        g,
        order: bfs_order(g),
        h,
        cap: g.n() / h,
        m,
        color: vec![UNCOLORED; g.n()],
        class_size: vec![0; h],
        cnt: vec![vec![0; h]; g.n()],
        nodes: 0,
        budget,
    };
    match search.solve(0, 0) {
        Some(true) => {
            let coloring =
                Coloring::new(g, search.color).expect("search produces proper colorings");
            let certificate = verify_hoffman_coloring(g, &coloring)
                .expect("full assignments satisfy the certificate by construction");
            Ok(HoffmanSearchOutcome::Found { coloring, certificate, trivial: false })
        }
        Some(false) => {
            Ok(HoffmanSearchOutcome::Absent { reason: AbsenceReason::SearchExhausted })
        }
        None => Ok(HoffmanSearchOutcome::Inconclusive { nodes: search.nodes }),
    }
}

/// Outcome of the Delsarte clique search.
#[derive(Debug, Clone)]
pub enum DelsarteOutcome {
    Found { clique: Vec<usize>, alpha: usize },
    Absent { reason: String },
    Inconclusive,
}

impl DelsarteOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self, DelsarteOutcome::Found { .. })
    }
    pub fn is_absent(&self) -> bool {
        matches!(self, DelsarteOutcome::Absent { .. })
    }
}

/// Searches a primitive strongly regular graph for a Delsarte clique: a
/// clique of size `h = s+1`, automatically seen by every outside vertex in
/// exactly `α` vertices. Exhausted search certifies absence.
pub fn find_delsarte_clique(g: &Graph, budget: u64) -> Result<DelsarteOutcome, ColoringError> {
    let srg = params::srg_data(g).ok_or(ColoringError::NotPrimitiveSrg)?;
    if !srg.primitive {
        return Err(ColoringError::NotPrimitiveSrg);
    }
    let geo = params::geometric_params(srg.k, srg.theta, srg.tau)?;
    let h = geo.hoffman_number();
    let Some(h_int) = h.as_integer() else {
        return Ok(DelsarteOutcome::Absent {
            reason: format!("Hoffman number {h} is not integral"),
        });
    };
    let h_int = h_int as usize;
    match max_clique(g, budget) {
        CliqueOutcome::Exact { size, witness } => {
            if size < h_int {
                return Ok(DelsarteOutcome::Absent {
                    reason: format!("clique number {size} is below h = {h_int}"),
                });
            }
            debug_assert_eq!(size, h_int, "Delsarte bound");
            Ok(DelsarteOutcome::Found { clique: witness, alpha: delsarte_alpha(g, &geo) })
        }
        CliqueOutcome::Interval { lower, witness, .. } if lower >= h_int => {
            Ok(DelsarteOutcome::Found {
                clique: witness[..h_int].to_vec(),
                alpha: delsarte_alpha(g, &geo),
            })
        }
        CliqueOutcome::Interval { .. } => Ok(DelsarteOutcome::Inconclusive),
    }
}

fn delsarte_alpha(_g: &Graph, geo: &params::GeometricParams) -> usize {
    geo.alpha.as_integer().expect("integral h forces integral alpha") as usize
}

/// Verifies that `clique` is a Delsarte clique: a clique of size `s+1` with
/// every outside vertex adjacent to exactly `α` of its vertices.
pub fn verify_delsarte_clique(g: &Graph, clique: &[usize]) -> Result<usize, String> {
    let srg = params::srg_data(g).ok_or("not a strongly regular graph")?;
    let geo = params::geometric_params(srg.k, srg.theta, srg.tau)
        .map_err(|e| e.to_string())?;
    let h = geo.hoffman_number().as_integer().ok_or("h not integral")? as usize;
    let alpha = geo.alpha.as_integer().ok_or("alpha not integral")? as usize;
    if clique.len() != h {
        return Err(format!("clique size {} != h = {h}", clique.len()));
    }
    for (i, &u) in clique.iter().enumerate() {
        for &v in &clique[i + 1..] {
            if !g.has_edge(u, v) {
                return Err(format!("{u} and {v} are not adjacent"));
            }
        }
    }
    let mut in_clique = vec![false; g.n()];
    for &v in clique {
        in_clique[v] = true;
    }
    for v in 0..g.n() {
        if in_clique[v] {
            continue;
        }
        let seen = g.neighbors(v).filter(|&w| in_clique[w]).count();
        if seen != alpha {
            return Err(format!("vertex {v} sees {seen} clique vertices, expected {alpha}"));
        }
    }
    Ok(alpha)
}

/// Outcome of the spread search.
#[derive(Debug, Clone)]
pub enum SpreadOutcome {
    Found { cliques: Vec<Vec<usize>> },
    Absent { reason: String },
    Inconclusive,
}

impl SpreadOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self, SpreadOutcome::Found { .. })
    }
}

/// Searches a primitive strongly regular graph for a spread (a partition
/// into Delsarte cliques) by finding a Hoffman coloring of the complement
/// and mapping its classes back.
pub fn find_spread(g: &Graph, budget: u64) -> Result<SpreadOutcome, ColoringError> {
    let srg = params::srg_data(g).ok_or(ColoringError::NotPrimitiveSrg)?;
    if !srg.primitive {
        return Err(ColoringError::NotPrimitiveSrg);
    }
    let comp = g.complement();
    match find_hoffman_coloring_checked(&comp, budget)? {
        HoffmanSearchOutcome::Found { coloring, .. } => {
            let cliques = coloring.classes();
            for clique in &cliques {
                verify_delsarte_clique(g, clique)
                    .expect("complement Hoffman classes are Delsarte cliques");
            }
            Ok(SpreadOutcome::Found { cliques })
        }
        HoffmanSearchOutcome::Absent { reason } => Ok(SpreadOutcome::Absent {
            reason: format!("complement has no Hoffman coloring: {reason}"),
        }),
        HoffmanSearchOutcome::Inconclusive { .. } => Ok(SpreadOutcome::Inconclusive),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named_graph;

    const BUDGET: u64 = 100_000_000;

    /// Brute-force maximum clique over all vertex subsets (n ≤ 20).
    fn brute_max_clique(g: &Graph) -> usize {
        assert!(g.n() <= 20);
        let mut best = 0;
        for mask in 0u32..(1 << g.n()) {
            let members: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
            if members.len() <= best {
                continue;
            }
            let is_clique = members
                .iter()
                .enumerate()
                .all(|(i, &u)| members[i + 1..].iter().all(|&v| g.has_edge(u, v)));
            if is_clique {
                best = members.len();
            }
        }
        best
    }

    #[test]
    fn max_clique_examples() {
        let p = named_graph("petersen").unwrap();
        assert_eq!(max_clique(&p, BUDGET).exact_size(), Some(2));

        let t6 = named_graph("triangular(6)").unwrap();
        let out = max_clique(&t6, BUDGET);
        assert_eq!(out.exact_size(), Some(5));
        // witness re-verifies by brute force
        let w = out.witness();
        for (i, &u) in w.iter().enumerate() {
            for &v in &w[i + 1..] {
                assert!(t6.has_edge(u, v));
            }
        }

        let r3 = named_graph("rook(3)").unwrap();
        assert_eq!(max_clique(&r3, BUDGET).exact_size(), Some(3));
        assert_eq!(brute_max_clique(&r3), 3);

        // budget exhaustion reports an interval
        let out = max_clique(&t6, 2);
        assert!(matches!(out, CliqueOutcome::Interval { .. }));
    }

    #[test]
    fn max_clique_matches_brute_force() {
        for name in ["petersen", "cycle(6)", "rook(3)", "octahedron", "paley(13)"] {
            let g = named_graph(name).unwrap();
            assert_eq!(max_clique(&g, BUDGET).exact_size(), Some(brute_max_clique(&g)), "{name}");
        }
    }

    #[test]
    fn chromatic_examples() {
        let cases = [
            ("petersen", 3),
            ("rook(3)", 3),
            ("shrikhande", 4),
            ("cycle(5)", 3),
            ("cycle(6)", 2),
            ("complete(7)", 7),
            ("octahedron", 3),
        ];
        for (name, expect) in cases {
            let g = named_graph(name).unwrap();
            match chromatic_number(&g, BUDGET) {
                ChromaticOutcome::Exact { chi, witness } => {
                    assert_eq!(chi, expect, "{name}");
                    assert!(witness.is_proper(&g), "{name}");
                    assert_eq!(witness.num_classes, expect, "{name}");
                }
                ChromaticOutcome::Interval { .. } => panic!("{name} exceeded budget"),
            }
        }
    }

    #[test]
    fn chromatic_budget_exhaustion_reports_interval() {
        let s = named_graph("shrikhande").unwrap();
        match chromatic_number(&s, 10) {
            ChromaticOutcome::Interval { lower, upper, witness } => {
                assert!(lower <= 4 && 4 <= upper);
                assert!(witness.is_proper(&s));
            }
            ChromaticOutcome::Exact { .. } => panic!("budget of 10 nodes cannot finish"),
        }
    }

    #[test]
    fn hoffman_coclique_examples() {
        // Petersen: a maximum coclique of size 4 = 10·2/5
        let p = named_graph("petersen").unwrap();
        let mut best = Vec::new();
        for mask in 0u32..(1 << 10) {
            let members: Vec<usize> = (0..10).filter(|&v| mask >> v & 1 == 1).collect();
            if members.len() == 4
                && members
                    .iter()
                    .enumerate()
                    .all(|(i, &u)| members[i + 1..].iter().all(|&v| !p.has_edge(u, v)))
            {
                best = members;
                break;
            }
        }
        let check = is_hoffman_coclique(&p, &best).unwrap();
        assert!(check.is_hoffman);
        assert!((check.ratio_bound - 4.0).abs() < 1e-6);

        // C6: one bipartition side
        let c6 = named_graph("cycle(6)").unwrap();
        let check = is_hoffman_coclique(&c6, &[0, 2, 4]).unwrap();
        assert!(check.is_hoffman);

        // a 3-coclique of Petersen falls short of the bound
        let small: Vec<usize> = best[..3].to_vec();
        let check = is_hoffman_coclique(&p, &small).unwrap();
        assert!(!check.is_hoffman);

        // adjacency inside the set is an error
        let (u, v) = p.edges().next().unwrap();
        assert!(matches!(
            is_hoffman_coclique(&p, &[u, v]),
            Err(ColoringError::NotCoclique(..))
        ));
    }

    #[test]
    fn verify_hoffman_examples() {
        // rook(3) with the Latin-square coloring (i+j) mod 3
        let r3 = named_graph("rook(3)").unwrap();
        let col = Coloring::new(&r3, (0..9).map(|v| (v / 3 + v % 3) % 3).collect()).unwrap();
        let cert = verify_hoffman_coloring(&r3, &col).unwrap();
        assert_eq!(cert.h, 3);
        assert_eq!(cert.class_size, 3);
        assert_eq!(cert.cross_degree, 2);
        for v in 0..9 {
            for c in 0..3 {
                let expect = if col.assignment[v] == c { 0 } else { 2 };
                assert_eq!(cert.cross_degrees[v][c], expect);
            }
        }

        // C6 bipartition
        let c6 = named_graph("cycle(6)").unwrap();
        let col = Coloring::new(&c6, vec![0, 1, 0, 1, 0, 1]).unwrap();
        let cert = verify_hoffman_coloring(&c6, &col).unwrap();
        assert_eq!((cert.h, cert.class_size, cert.cross_degree), (2, 3, 2));

        // any proper 3-coloring of Petersen is rejected: h = 2.5
        let p = named_graph("petersen").unwrap();
        let col = match chromatic_number(&p, BUDGET) {
            ChromaticOutcome::Exact { witness, .. } => witness,
            _ => unreachable!(),
        };
        assert!(matches!(
            verify_hoffman_coloring(&p, &col),
            Err(HoffmanRejection::NonIntegralHoffman { .. })
        ));
    }

    #[test]
    fn find_hoffman_examples() {
        // Shrikhande: found, nontrivial, classes of size 4, cross degrees 2
        let s = named_graph("shrikhande").unwrap();
        match find_hoffman_coloring(&s, BUDGET) {
            HoffmanSearchOutcome::Found { certificate, trivial, coloring } => {
                assert!(!trivial);
                assert_eq!(certificate.h, 4);
                assert_eq!(certificate.class_size, 4);
                assert_eq!(certificate.cross_degree, 2);
                assert!(coloring.is_proper(&s));
            }
            other => panic!("expected Found, got {other:?}"),
        }

        // Petersen: certified absence, h non-integral
        let p = named_graph("petersen").unwrap();
        match find_hoffman_coloring(&p, BUDGET) {
            HoffmanSearchOutcome::Absent {
                reason: AbsenceReason::NonIntegralHoffman { h },
            } => assert!((h - 2.5).abs() < 1e-9),
            other => panic!("expected absence, got {other:?}"),
        }

        // rook(3): found
        let r3 = named_graph("rook(3)").unwrap();
        assert!(find_hoffman_coloring(&r3, BUDGET).found().is_some());

        // C6: trivial bipartition
        let c6 = named_graph("cycle(6)").unwrap();
        match find_hoffman_coloring(&c6, BUDGET) {
            HoffmanSearchOutcome::Found { trivial, certificate, .. } => {
                assert!(trivial);
                assert_eq!(certificate.h, 2);
            }
            other => panic!("expected trivial coloring, got {other:?}"),
        }

        // preconditions
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(find_hoffman_coloring_checked(&p3, BUDGET).is_err());

        // budget exhaustion is inconclusive, never certified absence
        let schlafli = named_graph("schlafli").unwrap();
        assert!(matches!(
            find_hoffman_coloring(&schlafli, 5),
            HoffmanSearchOutcome::Inconclusive { .. }
        ));
    }

    #[test]
    fn delsarte_examples() {
        // rook(3): a line of the grid, with alpha = 1
        let r3 = named_graph("rook(3)").unwrap();
        match find_delsarte_clique(&r3, BUDGET).unwrap() {
            DelsarteOutcome::Found { clique, alpha } => {
                assert_eq!(alpha, 1);
                assert_eq!(verify_delsarte_clique(&r3, &clique), Ok(1));
            }
            other => panic!("expected Found, got {other:?}"),
        }

        // Shrikhande: certified absence, ω = 3 < 4 = h
        let s = named_graph("shrikhande").unwrap();
        match find_delsarte_clique(&s, BUDGET).unwrap() {
            DelsarteOutcome::Absent { reason } => assert!(reason.contains("below h")),
            other => panic!("expected absence, got {other:?}"),
        }

        // Petersen: h non-integral
        let p = named_graph("petersen").unwrap();
        assert!(find_delsarte_clique(&p, BUDGET).unwrap().is_absent());

        // non-SRG input rejected
        let c6 = named_graph("cycle(6)").unwrap();
        assert!(find_delsarte_clique(&c6, BUDGET).is_err());
    }

    #[test]
    fn spread_examples() {
        // rook(3): rows (or columns) form a spread
        let r3 = named_graph("rook(3)").unwrap();
        match find_spread(&r3, BUDGET).unwrap() {
            SpreadOutcome::Found { cliques } => {
                assert_eq!(cliques.len(), 3);
                let mut seen = vec![false; 9];
                for clique in &cliques {
                    assert_eq!(verify_delsarte_clique(&r3, clique), Ok(1));
                    // every clique is a full row or column of the grid
                    let rows: std::collections::BTreeSet<_> =
                        clique.iter().map(|&v| v / 3).collect();
                    let cols: std::collections::BTreeSet<_> =
                        clique.iter().map(|&v| v % 3).collect();
                    assert!(rows.len() == 1 || cols.len() == 1);
                    for &v in clique {
                        seen[v] = true;
                    }
                }
                assert!(seen.iter().all(|&s| s));
            }
            other => panic!("expected Found, got {other:?}"),
        }

        // triangular(5) is the complement of Petersen: no spread
        let t5 = named_graph("triangular(5)").unwrap();
        assert!(matches!(find_spread(&t5, BUDGET).unwrap(), SpreadOutcome::Absent { .. }));
    }

    #[test]
    fn eq8_chain_on_catalog() {
        // ω ≤ h ≤ χ for every primitive strongly regular catalog graph
        for entry in crate::graph::catalog() {
            if !entry.class.is_primitive_srg() {
                continue;
            }
            if entry.graph.n() > 20 {
                continue; // keep the unit test quick; acceptance covers more
            }
            let h = params::hoffman_number(&entry.graph).unwrap().to_f64();
            let omega = max_clique(&entry.graph, BUDGET).exact_size().unwrap() as f64;
            let chi = chromatic_number(&entry.graph, BUDGET).exact().unwrap() as f64;
            assert!(omega <= h + 1e-9, "{}", entry.name);
            assert!(h <= chi + 1e-9, "{}", entry.name);
        }
    }

    #[test]
    fn coloring_enumeration_is_exhaustive() {
        // C5 has 30 proper 3-colorings; with canonical class labels that is
        // 30/3! ... chromatic polynomial P(C5,3) = 30, partitions = 30/6 = 5
        let c5 = named_graph("cycle(5)").unwrap();
        let mut count = 0;
        for_each_coloring(&c5, 3, |col| {
            assert!(col.is_proper(&c5));
            count += 1;
        });
        assert_eq!(count, 5);
    }
}
