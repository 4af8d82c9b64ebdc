//! Graph representation, ingestion and combinatorial regularity
//! classification.
//!
//! Graphs are immutable once constructed: every operation is pure and the
//! lazily computed caches (degrees, distances) are write-once, so values can
//! be shared freely across worker threads.

mod graph6;
mod named;

pub use graph6::{parse_graph6, to_graph6, Graph6Error};
pub use named::{catalog, named_graph, CatalogEntry, NamedGraphError};

use std::collections::VecDeque;
use std::sync::OnceLock;

use crate::exact::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex {0} out of range for graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid edge list: {0}")]
    InvalidEdgeList(String),
    #[error("average undefined: graph has no {0}")]
    AverageUndefined(&'static str),
}

/// Immutable simple undirected graph with adjacency and distance structure.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    degrees: OnceLock<Vec<usize>>,
    distances: OnceLock<Vec<Vec<u32>>>,
}

/// Distance sentinel for disconnected pairs.
pub const INFINITY: u32 = u32::MAX;

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, g6={})", self.n, self.edge_count(), to_graph6(self))
    }
}

impl Graph {
    pub(crate) fn from_adjacency(n: usize, adj: Vec<bool>) -> Self {
        debug_assert_eq!(adj.len(), n * n);
        #[cfg(debug_assertions)]
        for i in 0..n {
            debug_assert!(!adj[i * n + i], "self-loop at {i}");
            for j in 0..n {
                debug_assert_eq!(adj[i * n + j], adj[j * n + i], "asymmetric at ({i},{j})");
            }
        }
        Self { n, adj, degrees: OnceLock::new(), distances: OnceLock::new() }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_adjacency(n, vec![false; n * n])
    }

    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut adj = vec![false; n * n];
        for (u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u * n + v] = true;
            adj[v * n + u] = true;
        }
        Ok(Self::from_adjacency(n, adj))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn degrees(&self) -> &[usize] {
        self.degrees.get_or_init(|| {
            (0..self.n)
                .map(|u| (0..self.n).filter(|&v| self.has_edge(u, v)).count())
                .collect()
        })
    }

    pub fn degree(&self, u: usize) -> usize {
        self.degrees()[u]
    }

    pub fn edge_count(&self) -> usize {
        self.degrees().iter().sum::<usize>() / 2
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.has_edge(u, v))
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n)
            .flat_map(move |u| ((u + 1)..self.n).map(move |v| (u, v)))
            .filter(move |&(u, v)| self.has_edge(u, v))
    }

    /// Non-adjacent distinct pairs `(u, v)` with `u < v`.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n)
            .flat_map(move |u| ((u + 1)..self.n).map(move |v| (u, v)))
            .filter(move |&(u, v)| !self.has_edge(u, v))
    }

    /// `k` if the graph is regular of valency `k`.
    pub fn regular_valency(&self) -> Option<usize> {
        let deg = self.degrees();
        let k = *deg.first()?;
        deg.iter().all(|&d| d == k).then_some(k)
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n.saturating_sub(1)) / 2
    }

    pub fn is_empty_graph(&self) -> bool {
        self.edge_count() == 0
    }

    pub fn complement(&self) -> Graph {
        let n = self.n;
        let mut adj = vec![false; n * n];
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    adj[u * n + v] = !self.adj[u * n + v];
                }
            }
        }
        Graph::from_adjacency(n, adj)
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        (0..self.n)
            .filter(|&w| w != u && w != v && self.has_edge(u, w) && self.has_edge(v, w))
            .count()
    }

    /// BFS distance matrix; [`INFINITY`] marks disconnected pairs.
    pub fn distances(&self) -> &Vec<Vec<u32>> {
        self.distances.get_or_init(|| {
            (0..self.n)
                .map(|s| {
                    let mut dist = vec![INFINITY; self.n];
                    dist[s] = 0;
                    let mut queue = VecDeque::from([s]);
                    while let Some(u) = queue.pop_front() {
                        for v in self.neighbors(u) {
                            if dist[v] == INFINITY {
                                dist[v] = dist[u] + 1;
                                queue.push_back(v);
                            }
                        }
                    }
                    dist
                })
                .collect()
        })
    }

    pub fn distance(&self, u: usize, v: usize) -> u32 {
        self.distances()[u][v]
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.distances()[0].iter().all(|&d| d != INFINITY)
    }

    /// Two-coloring by BFS; `None` when an odd cycle exists.
    pub fn bipartition(&self) -> Option<Vec<usize>> {
        let mut side = vec![usize::MAX; self.n];
        for s in 0..self.n {
            if side[s] != usize::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if side[v] == usize::MAX {
                        side[v] = 1 - side[u];
                        queue.push_back(v);
                    } else if side[v] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Exact triangle count.
    pub fn triangle_count(&self) -> u64 {
        let mut total = 0u64;
        for (u, v) in self.edges() {
            total += self.common_neighbors(u, v) as u64;
        }
        total / 3
    }

    /// Adjacency matrix as floats.
    pub fn adjacency_matrix<T: crate::linalg::Real>(&self) -> crate::linalg::Matrix<T> {
        crate::linalg::Matrix::from_fn(self.n, self.n, |i, j| {
            if self.has_edge(i, j) {
                T::one()
            } else {
                T::zero()
            }
        })
    }
}

/// Parses the plain edge-list format: first line `n`, then `u v` lines with
/// 0-based endpoints.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| GraphError::InvalidEdgeList("empty input".into()))?;
    let n: usize = header
        .trim()
        .parse()
        .map_err(|_| GraphError::InvalidEdgeList(format!("bad vertex count {header:?}")))?;
    let mut edges = Vec::new();
    for line in lines {
        let mut it = line.split_whitespace();
        let (u, v) = match (it.next(), it.next(), it.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => return Err(GraphError::InvalidEdgeList(format!("bad edge line {line:?}"))),
        };
        let u: usize = u
            .parse()
            .map_err(|_| GraphError::InvalidEdgeList(format!("bad endpoint {u:?}")))?;
        let v: usize = v
            .parse()
            .map_err(|_| GraphError::InvalidEdgeList(format!("bad endpoint {v:?}")))?;
        edges.push((u, v));
    }
    Graph::from_edges(n, edges)
}

/// Renders a graph in the edge-list text format.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u, v));
    }
    out
}

/// Strength levels of combinatorial regularity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum RegularityKind {
    Irregular,
    Regular,
    EdgeRegular,
    CoEdgeRegular,
    StronglyRegular,
}

/// Output of [`classify_regularity`]: the strongest regularity class that
/// applies, with the witnessing parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct RegularityClass {
    pub kind: RegularityKind,
    pub n: usize,
    /// Valency, when regular.
    pub k: Option<usize>,
    /// Common neighbors per adjacent pair, when edge-regular.
    pub a: Option<usize>,
    /// Common neighbors per non-adjacent pair, when co-edge-regular.
    pub c: Option<usize>,
    /// For strongly regular graphs: both the graph and its complement
    /// connected. `None` otherwise.
    pub primitive: Option<bool>,
}

impl RegularityClass {
    pub fn is_strongly_regular(&self) -> bool {
        self.kind == RegularityKind::StronglyRegular
    }

    /// The `(n, k, a, c)` tuple of a strongly regular graph.
    pub fn srg_params(&self) -> Option<(usize, usize, usize, usize)> {
        if self.is_strongly_regular() {
            Some((self.n, self.k?, self.a?, self.c?))
        } else {
            None
        }
    }

    pub fn is_primitive_srg(&self) -> bool {
        self.is_strongly_regular() && self.primitive == Some(true)
    }
}

/// Determines the strongest regularity class of `g`.
///
/// `a` is reported when all adjacent pairs share a constant number of common
/// neighbors (requires at least one edge), `c` likewise over non-adjacent
/// pairs. A regular graph with both constants, that is neither complete nor
/// empty, is strongly regular; `c(n-k-1) = k(k-a-1)` is asserted for those.
pub fn classify_regularity(g: &Graph) -> RegularityClass {
    let n = g.n();
    let k = match g.regular_valency() {
        Some(k) => k,
        None => {
            return RegularityClass {
                kind: RegularityKind::Irregular,
                n,
                k: None,
                a: None,
                c: None,
                primitive: None,
            }
        }
    };

    let constant_count = |pairs: &mut dyn Iterator<Item = (usize, usize)>| -> Option<usize> {
        let mut value = None;
        for (u, v) in pairs {
            let c = g.common_neighbors(u, v);
            match value {
                None => value = Some(c),
                Some(prev) if prev != c => return None,
                _ => {}
            }
        }
        value
    };

    let a = constant_count(&mut g.edges());
    let c = constant_count(&mut g.non_edges());

    let kind = match (a, c) {
        (Some(_), Some(_)) => RegularityKind::StronglyRegular,
        (Some(_), None) => RegularityKind::EdgeRegular,
        (None, Some(_)) => RegularityKind::CoEdgeRegular,
        (None, None) => RegularityKind::Regular,
    };

    if kind == RegularityKind::StronglyRegular {
        let (a, c) = (a.unwrap(), c.unwrap());
        // counting identity for strongly regular graphs
        debug_assert_eq!(c * (n - k - 1), k * (k - a - 1), "srg counting identity");
        let primitive = g.is_connected() && g.complement().is_connected();
        return RegularityClass {
            kind,
            n,
            k: Some(k),
            a: Some(a),
            c: Some(c),
            primitive: Some(primitive),
        };
    }
    RegularityClass { kind, n, k: Some(k), a, c, primitive: None }
}

/// Per-pair common-neighbor statistics split by adjacency.
#[derive(Debug, Clone)]
pub struct CommonNeighborProfile {
    /// Counts over adjacent pairs, one entry per edge.
    pub adjacent_counts: Vec<usize>,
    /// Counts over distinct non-adjacent pairs.
    pub non_adjacent_counts: Vec<usize>,
}

impl CommonNeighborProfile {
    /// Average common neighbors over edges; undefined for empty graphs.
    pub fn a_bar(&self) -> Result<Rational, GraphError> {
        if self.adjacent_counts.is_empty() {
            return Err(GraphError::AverageUndefined("edges"));
        }
        let sum: i64 = self.adjacent_counts.iter().map(|&c| c as i64).sum();
        Ok(Rational::new(sum, self.adjacent_counts.len() as i64))
    }

    /// Average common neighbors over non-adjacent pairs; undefined for
    /// complete graphs.
    pub fn c_bar(&self) -> Result<Rational, GraphError> {
        if self.non_adjacent_counts.is_empty() {
            return Err(GraphError::AverageUndefined("non-adjacent pairs"));
        }
        let sum: i64 = self.non_adjacent_counts.iter().map(|&c| c as i64).sum();
        Ok(Rational::new(sum, self.non_adjacent_counts.len() as i64))
    }
}

/// Collects the common-neighbor count of every vertex pair, split by
/// adjacency. The averages `ā`, `c̄` are exact rationals.
pub fn common_neighbor_profile(g: &Graph) -> CommonNeighborProfile {
    let adjacent_counts = g.edges().map(|(u, v)| g.common_neighbors(u, v)).collect();
    let non_adjacent_counts = g.non_edges().map(|(u, v)| g.common_neighbors(u, v)).collect();
    CommonNeighborProfile { adjacent_counts, non_adjacent_counts }
}

#[cfg(test)]
mod tests {
    use super::named::named_graph;
    use super::*;

    #[test]
    fn complement_involution_and_pentagon() {
        // the complement of C5 is again a connected 2-regular graph on 5
        // vertices, i.e. a pentagon (complementation permutes the labels)
        let c5 = named_graph("cycle(5)").unwrap();
        let comp = c5.complement();
        assert_eq!(comp.regular_valency(), Some(2));
        assert!(comp.is_connected());
        let k4 = named_graph("complete(4)").unwrap();
        assert!(k4.complement().is_empty_graph());
        let p = named_graph("petersen").unwrap();
        assert_eq!(p.complement().complement(), p);
    }

    #[test]
    fn petersen_complement_is_triangular5() {
        let t5 = named_graph("petersen").unwrap().complement();
        let class = classify_regularity(&t5);
        assert_eq!(class.srg_params(), Some((10, 6, 3, 4)));
        assert_eq!(class.primitive, Some(true));
    }

    #[test]
    fn classify_examples() {
        let p = named_graph("petersen").unwrap();
        let class = classify_regularity(&p);
        assert_eq!(class.srg_params(), Some((10, 3, 0, 1)));
        assert!(class.is_primitive_srg());

        let c6 = named_graph("cycle(6)").unwrap();
        let class = classify_regularity(&c6);
        assert_eq!(class.kind, RegularityKind::EdgeRegular);
        assert_eq!(class.k, Some(2));
        assert_eq!(class.a, Some(0));
        assert_eq!(class.c, None);

        let path3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(classify_regularity(&path3).kind, RegularityKind::Irregular);
    }

    #[test]
    fn profile_examples() {
        // C6: six distance-2 pairs with one common neighbor, three antipodal
        // pairs with none
        let c6 = named_graph("cycle(6)").unwrap();
        let prof = common_neighbor_profile(&c6);
        assert_eq!(prof.a_bar().unwrap(), Rational::new(0, 1));
        assert_eq!(prof.c_bar().unwrap(), Rational::new(2, 3));

        let p = named_graph("petersen").unwrap();
        let prof = common_neighbor_profile(&p);
        assert_eq!(prof.a_bar().unwrap(), Rational::new(0, 1));
        assert_eq!(prof.c_bar().unwrap(), Rational::new(1, 1));

        let k4 = named_graph("complete(4)").unwrap();
        let prof = common_neighbor_profile(&k4);
        assert_eq!(prof.a_bar().unwrap(), Rational::new(2, 1));
        assert!(prof.c_bar().is_err());

        let e3 = Graph::empty(3);
        assert!(common_neighbor_profile(&e3).a_bar().is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = named_graph("petersen").unwrap();
        let text = to_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        assert_eq!(g, back);
        assert!(parse_edge_list("3\n0 3\n").is_err());
        assert!(parse_edge_list("3\n1 1\n").is_err());
        assert!(parse_edge_list("").is_err());
    }

    #[test]
    fn distances_and_connectivity() {
        let p = named_graph("petersen").unwrap();
        assert!(p.is_connected());
        assert_eq!(p.distance(0, 0), 0);
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!two_k2.is_connected());
        assert_eq!(two_k2.distance(0, 2), INFINITY);
    }

    #[test]
    fn triangle_counts() {
        assert_eq!(named_graph("complete(4)").unwrap().triangle_count(), 4);
        assert_eq!(named_graph("rook(3)").unwrap().triangle_count(), 6);
        assert_eq!(named_graph("petersen").unwrap().triangle_count(), 0);
    }

    /// Complement parameter rules over every regular graph on at most 7
    /// vertices: the complement of an a-edge-regular graph is
    /// (n-2k+a)-co-edge-regular and vice versa.
    #[test]
    fn complement_rules_exhaustive() {
        for n in 2..=7usize {
            for k in 0..n {
                crate::survey::for_each_regular_graph(n, k, false, |g| {
                    let class = classify_regularity(g);
                    let comp = g.complement();
                    let comp_class = classify_regularity(&comp);
                    // complement of a-edge-regular is (n-2k+a)-co-edge-regular
                    if let (Some(k), Some(a)) = (class.k, class.a) {
                        assert_eq!(
                            comp_class.c,
                            Some(n + a - 2 * k),
                            "complement co-edge parameter for {g:?}"
                        );
                    }
                    // complement of c-co-edge-regular is (n-2k+c-2)-edge-regular
                    if let (Some(k), Some(c)) = (class.k, class.c) {
                        assert_eq!(
                            comp_class.a,
                            Some(n + c - 2 * k - 2),
                            "complement edge parameter for {g:?}"
                        );
                    }
                    if let Some((n, k, a, c)) = class.srg_params() {
                        assert_eq!(
                            comp_class.srg_params(),
                            Some((n, n - k - 1, n + c - 2 * k - 2, n + a - 2 * k)),
                            "complement srg parameters for {g:?}"
                        );
                    }
                });
            }
        }
    }
}
