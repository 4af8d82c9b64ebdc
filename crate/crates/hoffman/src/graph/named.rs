//! Named graph families and the embedded catalog.
//!
//! Constructible families (cycles, complete multipartite, rook and
//! triangular graphs, Kneser, Paley, hypercubes, the icosahedron) are built
//! on demand. Graphs that are error-prone to construct algebraically
//! (Shrikhande, Clebsch, Schläfli and its complement, the three Chang
//! graphs) ship as graph6 literals and are re-classified on every load; a
//! parameter mismatch reports the catalog entry as corrupt.

use super::{classify_regularity, parse_graph6, Graph, RegularityClass};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NamedGraphError {
    #[error("unknown graph family {0:?}")]
    UnknownFamily(String),
    #[error("bad parameters for {family}: {message}")]
    BadParameters { family: String, message: String },
    #[error("malformed named-graph spec {0:?}")]
    MalformedSpec(String),
    #[error("embedded catalog entry {0:?} failed its self-check")]
    CatalogCorrupt(String),
}

fn bad(family: &str, message: impl Into<String>) -> NamedGraphError {
    NamedGraphError::BadParameters { family: family.into(), message: message.into() }
}

pub fn cycle(n: usize) -> Result<Graph, NamedGraphError> {
    if n < 3 {
        return Err(bad("cycle", "need n >= 3"));
    }
    Ok(Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap())
}

pub fn complete(n: usize) -> Result<Graph, NamedGraphError> {
    if n == 0 {
        return Err(bad("complete", "need n >= 1"));
    }
    Ok(Graph::from_edges(n, (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))).unwrap())
}

pub fn complete_multipartite(parts: &[usize]) -> Result<Graph, NamedGraphError> {
    if parts.len() < 2 || parts.iter().any(|&p| p == 0) {
        return Err(bad("complete_multipartite", "need at least two nonempty parts"));
    }
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (idx, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat(idx).take(size));
    }
    let edges = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .filter(|&(u, v)| part_of[u] != part_of[v]);
    Ok(Graph::from_edges(n, edges).unwrap())
}

/// Rook's graph `L(K_{m,m})`: vertices are cells of an m×m grid, adjacent
/// when they share a row or column.
pub fn rook(m: usize) -> Result<Graph, NamedGraphError> {
    if m < 2 {
        return Err(bad("rook", "need m >= 2"));
    }
    let n = m * m;
    let edges = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).filter(|&(u, v)| {
        let (r1, c1) = (u / m, u % m);
        let (r2, c2) = (v / m, v % m);
        (r1 == r2) != (c1 == c2)
    });
    Ok(Graph::from_edges(n, edges).unwrap())
}

/// Triangular graph `L(K_m)`: vertices are 2-subsets of an m-set, adjacent
/// when they intersect.
pub fn triangular(m: usize) -> Result<Graph, NamedGraphError> {
    if m < 2 {
        return Err(bad("triangular", "need m >= 2"));
    }
    let pairs: Vec<(usize, usize)> =
        (0..m).flat_map(|i| ((i + 1)..m).map(move |j| (i, j))).collect();
    let n = pairs.len();
    let edges = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).filter(|&(u, v)| {
        let (a, b) = pairs[u];
        let (c, d) = pairs[v];
        a == c || a == d || b == c || b == d
    });
    Ok(Graph::from_edges(n, edges).unwrap())
}

/// Kneser graph on 2-subsets: vertices are pairs from a v-set, adjacent when
/// disjoint. `kneser(5, 2)` is the Petersen graph.
pub fn kneser2(v: usize) -> Result<Graph, NamedGraphError> {
    if v < 4 {
        return Err(bad("kneser", "need v >= 4"));
    }
    let pairs: Vec<(usize, usize)> =
        (0..v).flat_map(|i| ((i + 1)..v).map(move |j| (i, j))).collect();
    let n = pairs.len();
    let edges = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).filter(|&(u, w)| {
        let (a, b) = pairs[u];
        let (c, d) = pairs[w];
        a != c && a != d && b != c && b != d
    });
    Ok(Graph::from_edges(n, edges).unwrap())
}

fn is_prime(q: usize) -> bool {
    if q < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            return false;
        }
        p += 1;
    }
    true
}

/// Paley graph on a prime `q ≡ 1 (mod 4)`: quadratic residues as the
/// connection set. Square prime powers are out of scope; `paley(9)` is
/// reachable as `rook(3)`, which is isomorphic to it.
pub fn paley(q: usize) -> Result<Graph, NamedGraphError> {
    if !is_prime(q) || q % 4 != 1 {
        return Err(bad("paley", "need a prime q = 1 (mod 4)"));
    }
    let mut residue = vec![false; q];
    for x in 1..q {
        residue[x * x % q] = true;
    }
    let edges = (0..q)
        .flat_map(|u| ((u + 1)..q).map(move |v| (u, v)))
        .filter(|&(u, v)| residue[(v - u) % q]);
    Ok(Graph::from_edges(q, edges).unwrap())
}

pub fn hypercube(d: usize) -> Result<Graph, NamedGraphError> {
    if !(1..=10).contains(&d) {
        return Err(bad("hypercube", "need 1 <= d <= 10"));
    }
    let n = 1usize << d;
    let edges =
        (0..n).flat_map(|u| (0..d).map(move |b| (u, u ^ (1 << b)))).filter(|&(u, v)| u < v);
    Ok(Graph::from_edges(n, edges).unwrap())
}

/// The icosahedron: pentagonal antiprism plus two apexes.
pub fn icosahedron() -> Graph {
    let mut edges = vec![];
    for i in 0..5 {
        edges.push((0, 1 + i)); // top apex to upper ring
        edges.push((11, 6 + i)); // bottom apex to lower ring
        edges.push((1 + i, 1 + (i + 1) % 5)); // upper ring
        edges.push((6 + i, 6 + (i + 1) % 5)); // lower ring
        edges.push((1 + i, 6 + i)); // antiprism struts
        edges.push((1 + i, 6 + (i + 1) % 5));
    }
    Graph::from_edges(12, edges).unwrap()
}

/// Expected classification for a catalog literal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum LiteralCheck {
    /// Primitive strongly regular with these (n, k, a, c).
    Srg(usize, usize, usize, usize),
}

struct Literal {
    name: &'static str,
    graph6: &'static str,
    check: LiteralCheck,
}

// Embedded graph6 literals. Each is re-classified on load; see
// `load_literal`.
const LITERALS: &[Literal] = &[
    Literal {
        name: "shrikhande",
        graph6: r"OlfJHsHBGK_\oHWKeBK_\",
        check: LiteralCheck::Srg(16, 6, 2, 2),
    },
    Literal {
        name: "clebsch",
        graph6: "Or`HOm@OhHBBEGHCgPSAJ",
        check: LiteralCheck::Srg(16, 5, 0, 2),
    },
    Literal {
        name: "schlafli",
        graph6: r"Z~~{ACbCwV_~NNVVllzjn]]}]^D\\LlkmyyNrrXemiizZHfxxKuyyIl}]BLw",
        check: LiteralCheck::Srg(27, 16, 10, 8),
    },
    Literal {
        name: "co-schlafli",
        graph6: "Z??B|z[zFg^?ooggQQCSO``@`_yaaqQRPDDoKKeXPTTCcuWEErHDDtQ@`{q?",
        check: LiteralCheck::Srg(27, 10, 1, 5),
    },
    Literal {
        name: "chang1",
        graph6: r"[J\zy?`CWR_n?~FfyIEQPpPNBA|``DPOeccJgg`zNKXqalSccxdbBUXPPYiZrpe?",
        check: LiteralCheck::Srg(28, 12, 6, 4),
    },
    Literal {
        name: "chang2",
        graph6: r"[J\{DwaCgT_v?NFVyQESPp`N?AyW]|VOafcHgW`ZHK\qylCcSxD[KhEpHYyRtpaA",
        check: LiteralCheck::Srg(28, 12, 6, 4),
    },
    Literal {
        name: "chang3",
        graph6: r"[`Kx~|_SIPgfOngGQAKOR`@]ABw[[~RQbddHFFM`LM\YidEssh@KkxAxXQwPpraa",
        check: LiteralCheck::Srg(28, 12, 6, 4),
    },
];

fn load_literal(name: &str) -> Result<Graph, NamedGraphError> {
    let lit = LITERALS
        .iter()
        .find(|l| l.name == name)
        .ok_or_else(|| NamedGraphError::UnknownFamily(name.into()))?;
    let g = parse_graph6(lit.graph6)
        .map_err(|_| NamedGraphError::CatalogCorrupt(name.into()))?;
    let class = classify_regularity(&g);
    let ok = match lit.check {
        LiteralCheck::Srg(n, k, a, c) => {
            class.srg_params() == Some((n, k, a, c)) && class.primitive == Some(true)
        }
    };
    if !ok {
        return Err(NamedGraphError::CatalogCorrupt(name.into()));
    }
    Ok(g)
}

fn parse_spec(spec: &str) -> Result<(String, Vec<usize>), NamedGraphError> {
    let spec = spec.trim();
    if let Some(open) = spec.find('(') {
        if !spec.ends_with(')') {
            return Err(NamedGraphError::MalformedSpec(spec.into()));
        }
        let name = spec[..open].trim().to_ascii_lowercase();
        let inner = &spec[open + 1..spec.len() - 1];
        let args = inner
            .split(',')
            .map(|a| a.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| NamedGraphError::MalformedSpec(spec.into()))?;
        if name.is_empty() || args.is_empty() {
            return Err(NamedGraphError::MalformedSpec(spec.into()));
        }
        Ok((name, args))
    } else {
        Ok((spec.to_ascii_lowercase(), vec![]))
    }
}

/// Builds a named graph from a spec like `petersen`, `cycle(6)`, `rook(4)`,
/// `kneser(5,2)` or `complete_multipartite(2,2,2)`.
pub fn named_graph(spec: &str) -> Result<Graph, NamedGraphError> {
    let (name, args) = parse_spec(spec)?;
    let expect_arity = |want: usize| -> Result<(), NamedGraphError> {
        if args.len() == want {
            Ok(())
        } else {
            Err(bad(&name, format!("expected {want} parameter(s), got {}", args.len())))
        }
    };
    match name.as_str() {
        "cycle" => {
            expect_arity(1)?;
            cycle(args[0])
        }
        "complete" => {
            expect_arity(1)?;
            complete(args[0])
        }
        "complete_multipartite" => complete_multipartite(&args),
        "rook" => {
            expect_arity(1)?;
            rook(args[0])
        }
        "triangular" => {
            expect_arity(1)?;
            triangular(args[0])
        }
        "kneser" => {
            expect_arity(2)?;
            if args[1] != 2 {
                return Err(bad("kneser", "only 2-subset Kneser graphs are supported"));
            }
            kneser2(args[0])
        }
        "paley" => {
            expect_arity(1)?;
            paley(args[0])
        }
        "hypercube" => {
            expect_arity(1)?;
            hypercube(args[0])
        }
        "pentagon" => {
            expect_arity(0)?;
            cycle(5)
        }
        "petersen" => {
            expect_arity(0)?;
            kneser2(5)
        }
        "octahedron" => {
            expect_arity(0)?;
            complete_multipartite(&[2, 2, 2])
        }
        "icosahedron" => {
            expect_arity(0)?;
            Ok(icosahedron())
        }
        "shrikhande" | "clebsch" | "schlafli" | "co-schlafli" | "chang1" | "chang2"
        | "chang3" => {
            expect_arity(0)?;
            load_literal(&name)
        }
        other => Err(NamedGraphError::UnknownFamily(other.into())),
    }
}

/// One catalog row: a named graph together with its verified classification.
pub struct CatalogEntry {
    pub name: &'static str,
    pub graph: Graph,
    pub class: RegularityClass,
}

/// Every named graph the crate ships, classified at load time. Used by the
/// `catalog` CLI subcommand and as the test corpus.
pub fn catalog() -> Vec<CatalogEntry> {
    const NAMES: &[&str] = &[
        "pentagon",
        "petersen",
        "rook(3)",
        "rook(4)",
        "triangular(5)",
        "triangular(6)",
        "paley(13)",
        "clebsch",
        "shrikhande",
        "icosahedron",
        "schlafli",
        "co-schlafli",
        "chang1",
        "chang2",
        "chang3",
    ];
    NAMES
        .iter()
        .map(|name| {
            let graph = named_graph(name).expect("catalog entries must load");
            let class = classify_regularity(&graph);
            CatalogEntry { name, graph, class }
        })
        .collect()
}
