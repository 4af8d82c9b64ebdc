//! Strict vector colorings: the regular-simplex construction from a proper
//! coloring, the eigenprojector-based canonical construction for
//! walk-regular graphs, validity checking, and the two-coloring witness of
//! non-unique vector colorability.

use crate::coloring::{self, Coloring};
use crate::graph::Graph;
use crate::linalg::Real;
use crate::params;
use crate::spectral;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum VectorError {
    #[error("need at least two color classes")]
    SingleClass,
    #[error("graph must be connected")]
    Disconnected,
    #[error("graph is not 1-walk-regular, canonical construction unavailable")]
    InsufficientWalkRegularity,
    #[error("degenerate projector row at vertex {0}")]
    DegenerateRow(usize),
    #[error("canonical coloring failed validation: {0}")]
    NotStrict(String),
    #[error("vector count {0} does not match vertex count {1}")]
    SizeMismatch(usize, usize),
    #[error("hypothesis not met: {0}")]
    Inapplicable(String),
    #[error("search budget exceeded while testing Hoffman colorability")]
    Inconclusive,
    #[error(transparent)]
    Spectral(#[from] spectral::SpectralError),
    #[error(transparent)]
    Params(#[from] params::ParamsError),
    #[error(transparent)]
    Coloring(#[from] coloring::ColoringError),
}

/// Unit vectors assigned to the vertices, targeting edge inner products
/// `≤ -1/(t-1)` (exactly, when strict).
#[derive(Debug, Clone)]
pub struct VectorColoring<T> {
    /// One row per vertex.
    pub vectors: Vec<Vec<T>>,
    /// Target value `t ≥ 2`.
    pub target: T,
    pub strict: bool,
    /// Validation tolerance.
    pub tol: T,
}

impl<T: Real> VectorColoring<T> {
    pub fn dimension(&self) -> usize {
        self.vectors.first().map_or(0, Vec::len)
    }

    pub fn gram(&self, u: usize, v: usize) -> T {
        dot(&self.vectors[u], &self.vectors[v])
    }
}

fn dot<T: Real>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (&x, &y)| acc + x * y)
}

/// The `c` vertices of a regular simplex in `R^(c-1)`: unit vectors with
/// pairwise inner products exactly `-1/(c-1)`. Columns of the Helmert
/// basis, rescaled; no iteration involved, so the products are exact to
/// rounding.
pub fn simplex_vectors<T: Real>(c: usize) -> Result<Vec<Vec<T>>, VectorError> {
    if c < 2 {
        return Err(VectorError::SingleClass);
    }
    // Helmert rows h_j (j = 1..c-1): j ones, then -j, then zeros, scaled to
    // unit norm. Vertex i gets the i-th coordinate of each row, rescaled by
    // 1/sqrt(1 - 1/c).
    let scale = (T::one() - T::one() / T::from_usize(c).unwrap()).sqrt().recip();
    let mut vectors = vec![vec![T::zero(); c - 1]; c];
    for j in 1..c {
        let jf = T::from_usize(j).unwrap();
        let norm = (jf * (jf + T::one())).sqrt();
        for (i, row) in vectors.iter_mut().enumerate() {
            let h = if i < j {
                T::one() / norm
            } else if i == j {
                -jf / norm
            } else {
                T::zero()
            };
            row[j - 1] = h * scale;
        }
    }
    Ok(vectors)
}

/// Lifts a proper coloring with `c ≥ 2` classes to a strict vector
/// `c`-coloring through the regular simplex.
pub fn simplex_vector_coloring<T: Real>(
    col: &Coloring,
) -> Result<VectorColoring<T>, VectorError> {
    let c = col.num_classes;
    let simplex = simplex_vectors::<T>(c)?;
    let vectors = col.assignment.iter().map(|&cls| simplex[cls].clone()).collect();
    Ok(VectorColoring {
        vectors,
        target: T::from_usize(c).unwrap(),
        strict: true,
        tol: T::from_f64(1e-9).unwrap(),
    })
}

/// Validity report for a vector coloring against a graph.
#[derive(Debug, Clone, serde::Serialize)]
pub struct VectorCheckReport<T> {
    pub valid: bool,
    pub strict: bool,
    pub locally_injective: bool,
    /// Largest deviation of a vector norm from 1.
    pub worst_unit_deviation: T,
    /// Edge with the largest inner-product excess over `-1/(t-1)`, if any
    /// violates validity.
    pub worst_edge: Option<(usize, usize, T)>,
    /// A distance-2 pair sharing (numerically) one vector, if any.
    pub coincident_pair: Option<(usize, usize)>,
}

/// Checks unit norms, the edge inner-product condition (validity and
/// strictness at `-1/(t-1)`), and local injectivity (distance-2 pairs get
/// distinct vectors).
pub fn check_vector_coloring<T: Real>(
    g: &Graph,
    vc: &VectorColoring<T>,
) -> Result<VectorCheckReport<T>, VectorError> {
    if vc.vectors.len() != g.n() {
        return Err(VectorError::SizeMismatch(vc.vectors.len(), g.n()));
    }
    let bound = -(T::one() / (vc.target - T::one()));
    let mut worst_unit = T::zero();
    for v in &vc.vectors {
        worst_unit = worst_unit.max((dot(v, v).sqrt() - T::one()).abs());
    }
    let mut valid = worst_unit <= vc.tol;
    let mut strict = valid;
    let mut worst_edge: Option<(usize, usize, T)> = None;
    for (u, v) in g.edges() {
        let ip = vc.gram(u, v);
        let excess = ip - bound;
        if excess > vc.tol {
            valid = false;
            strict = false;
            if worst_edge.map_or(true, |(_, _, e)| excess > e) {
                worst_edge = Some((u, v, excess));
            }
        } else if excess < -vc.tol {
            strict = false;
        }
    }
    // local injectivity: distance-2 pairs must receive distinct vectors
    let inj_tol = T::from_f64(1e-6).unwrap();
    let dist = g.distances();
    let mut coincident = None;
    'outer: for u in 0..g.n() {
        for v in (u + 1)..g.n() {
            if dist[u][v] != 2 {
                continue;
            }
            let diff: T = vc.vectors[u]
                .iter()
                .zip(&vc.vectors[v])
                .fold(T::zero(), |acc, (&a, &b)| acc + (a - b) * (a - b));
            if diff.sqrt() <= inj_tol {
                coincident = Some((u, v));
                break 'outer;
            }
        }
    }
    Ok(VectorCheckReport {
        valid,
        strict,
        locally_injective: coincident.is_none(),
        worst_unit_deviation: worst_unit,
        worst_edge,
        coincident_pair: coincident,
    })
}

/// The canonical strict vector coloring of a connected graph that is at
/// least 1-walk-regular: normalized rows of the λmin eigenprojector, strict
/// at value `h` with every edge inner product `-1/(h-1)`.
pub fn canonical_vector_coloring<T: Real>(
    g: &Graph,
    tol: T,
) -> Result<(VectorColoring<T>, VectorCheckReport<T>), VectorError> {
    let level = spectral::walk_regularity_level(g, tol)?;
    if level.is_none() || level == Some(0) {
        return Err(VectorError::InsufficientWalkRegularity);
    }
    let spec = spectral::spectrum(g, tol)?;
    let n = g.n();
    let h = T::one() - spec.lambda_max() / spec.lambda_min();
    let projectors = spectral::eigenprojectors(&spec);
    let e_min = projectors.min_projector();
    let mut vectors = Vec::with_capacity(n);
    for u in 0..n {
        let row = e_min.row(u);
        let norm = dot(row, row).sqrt();
        if norm <= T::from_f64(1e-12).unwrap() {
            return Err(VectorError::DegenerateRow(u));
        }
        vectors.push(row.iter().map(|&x| x / norm).collect());
    }
    let vc = VectorColoring { vectors, target: h, strict: true, tol };
    let report = check_vector_coloring(g, &vc)?;
    if !report.valid || !report.strict {
        return Err(VectorError::NotStrict(format!(
            "worst edge deviation {:?}",
            report.worst_edge
        )));
    }
    Ok((vc, report))
}

/// Witness that a graph is not uniquely vector colorable: two optimal
/// strict vector colorings whose Gram matrices differ on a distance-2 pair.
#[derive(Debug, Clone)]
pub struct NonUvcWitness<T> {
    /// Simplex lift of a Hoffman coloring; not locally injective.
    pub simplex: VectorColoring<T>,
    /// Canonical eigenprojector coloring; locally injective.
    pub canonical: VectorColoring<T>,
    /// A distance-2 pair in one Hoffman color class.
    pub pair: (usize, usize),
    /// Gram entries of the pair under the two colorings: 1 versus < 1.
    pub gram_simplex: T,
    pub gram_canonical: T,
}

/// Produces the non-unique-vector-colorability witness for a connected
/// 2-walk-regular, non-trivially Hoffman colorable graph: the simplex lift
/// of a Hoffman coloring and the canonical coloring are both strict at
/// value `h`, but only the canonical one is locally injective, so their
/// Gram matrices differ and no orthogonal map relates them.
pub fn non_uvc_witness<T: Real>(
    g: &Graph,
    tol: T,
    budget: u64,
) -> Result<NonUvcWitness<T>, VectorError> {
    if !g.is_connected() {
        return Err(VectorError::Disconnected);
    }
    if spectral::walk_regularity_level(g, tol)? != Some(2) {
        return Err(VectorError::Inapplicable("graph is not 2-walk-regular".into()));
    }
    let (coloring, trivial) = match coloring::find_hoffman_coloring_checked(g, budget)? {
        coloring::HoffmanSearchOutcome::Found { coloring, trivial, .. } => (coloring, trivial),
        coloring::HoffmanSearchOutcome::Absent { reason } => {
            return Err(VectorError::Inapplicable(format!(
                "graph is not Hoffman colorable: {reason}"
            )));
        }
        coloring::HoffmanSearchOutcome::Inconclusive { .. } => {
            return Err(VectorError::Inconclusive);
        }
    };
    if trivial {
        return Err(VectorError::Inapplicable(
            "graph is only trivially Hoffman colorable (bipartite or complete multipartite)"
                .into(),
        ));
    }

    let simplex = simplex_vector_coloring::<T>(&coloring)?;
    let (canonical, canonical_report) = canonical_vector_coloring::<T>(g, tol)?;
    if !canonical_report.locally_injective {
        return Err(VectorError::Inapplicable(
            "canonical coloring is not locally injective".into(),
        ));
    }

    // a same-class pair at distance 2 exists because the Hoffman coloring
    // is not locally injective; find the witness pair
    let dist = g.distances();
    let mut pair = None;
    'outer: for u in 0..g.n() {
        for v in (u + 1)..g.n() {
            if dist[u][v] == 2 && coloring.assignment[u] == coloring.assignment[v] {
                pair = Some((u, v));
                break 'outer;
            }
        }
    }
    let (u, v) = pair.ok_or_else(|| {
        VectorError::Inapplicable("no same-class pair at distance 2".into())
    })?;
    let gram_simplex = simplex.gram(u, v);
    let gram_canonical = canonical.gram(u, v);
    debug_assert!((gram_simplex - T::one()).abs() < T::from_f64(1e-9).unwrap());
    Ok(NonUvcWitness { simplex, canonical, pair: (u, v), gram_simplex, gram_canonical })
}
