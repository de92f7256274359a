//! Constructors for the parametrized graph families, and the `family:params`
//! string grammar used on the command line.
//!
//! Vertex numbering:
//! * paths and cycles are sequential, `i ~ i + 1`;
//! * products are row-major, see [`Graph::cartesian_product`];
//! * stars, wheels and flowers put the center at 0;
//! * complete bipartite `K_{m,n}` has sides `0..m` and `m..m+n`;
//! * double stars have centers 0 and 1, then the leaves of 0, then of 1;
//! * cactus chains are built cycle by cycle, see [`cactus_chain`].

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// `K_{1,n}`.
    Star(usize),
    /// Adjacent centers with `n1` and `n2` leaves.
    DoubleStar(usize, usize),
    /// `P_2 □ P_n`.
    Ladder(usize),
    /// `P_2 □ C_n`, the circular ladder on `2n` vertices.
    Prism(usize),
    /// `P_m □ P_n`.
    Grid(usize, usize),
    /// `K_{1,n} □ P_2`.
    Book(usize),
    /// `K_1` joined to a rim `C_n`.
    Wheel(usize),
    /// `n` triangles sharing one vertex.
    Friendship(usize),
    /// `D_m^n`: `n` cycles of length `m` sharing one vertex.
    GenFriendship {
        m: usize,
        n: usize,
    },
    /// `C_n(S)` with `S` strictly increasing in `1..=n/2`.
    Circulant(usize, Vec<usize>),
    /// `K_m` with a private `K_n` attached at every clique vertex.
    Qmn(usize, usize),
    /// `K_m` with a copy of `base` attached at `root` to every clique vertex.
    QmH {
        m: usize,
        base: Box<FamilySpec>,
        root: usize,
    },
    TriangularChain(usize),
    ParaSquareChain(usize),
    OrthoSquareChain(usize),
    ParaHexChain(usize),
    MetaChain(usize),
}

fn invalid(family: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameters {
        family,
        reason: reason.into(),
    }
}

fn at_least(family: &'static str, what: &str, value: usize, min: usize) -> Result<()> {
    if value < min {
        Err(invalid(
            family,
            format!("{what} = {value}, need {what} >= {min}"),
        ))
    } else {
        Ok(())
    }
}

impl FamilySpec {
    /// Short family key, as used in spec strings.
    pub fn key(&self) -> &'static str {
        use FamilySpec::*;
        match self {
            Path(_) => "path",
            Cycle(_) => "cycle",
            Complete(_) => "complete",
            CompleteBipartite(..) => "bipartite",
            Star(_) => "star",
            DoubleStar(..) => "dstar",
            Ladder(_) => "ladder",
            Prism(_) => "prism",
            Grid(..) => "grid",
            Book(_) => "book",
            Wheel(_) => "wheel",
            Friendship(_) => "friendship",
            GenFriendship { .. } => "flower",
            Circulant(..) => "circulant",
            Qmn(..) => "qmn",
            QmH { .. } => "qmh",
            TriangularChain(_) => "tchain",
            ParaSquareChain(_) => "qchain",
            OrthoSquareChain(_) => "ochain",
            ParaHexChain(_) => "hchain",
            MetaChain(_) => "mchain",
        }
    }

    pub fn validate(&self) -> Result<()> {
        use FamilySpec::*;
        let key = self.key();
        match self {
            Path(n) | Complete(n) | Star(n) | Book(n) | Friendship(n) | Ladder(n) => {
                at_least(key, "n", *n, 1)
            }
            Cycle(n) | Prism(n) | Wheel(n) => at_least(key, "n", *n, 3),
            CompleteBipartite(m, n) | Grid(m, n) => {
                at_least(key, "m", *m, 1)?;
                at_least(key, "n", *n, 1)
            }
            DoubleStar(..) => Ok(()),
            GenFriendship { m, n } => {
                at_least(key, "m", *m, 3)?;
                at_least(key, "n", *n, 1)
            }
            Circulant(n, s) => {
                at_least(key, "n", *n, 3)?;
                if s.is_empty() {
                    return Err(invalid(key, "empty connection set"));
                }
                if s[0] < 1 || s.windows(2).any(|w| w[0] >= w[1]) || *s.last().unwrap() > n / 2 {
                    return Err(invalid(
                        key,
                        format!(
                            "connection set {s:?} must satisfy 1 <= a_1 < ... < a_m <= {}",
                            n / 2
                        ),
                    ));
                }
                Ok(())
            }
            Qmn(m, n) => {
                at_least(key, "m", *m, 2)?;
                at_least(key, "n", *n, 1)
            }
            QmH { m, base, root } => {
                at_least(key, "m", *m, 2)?;
                base.validate()?;
                let order = base.vertex_count();
                if *root >= order {
                    return Err(invalid(key, format!("root {root} outside 0..{order}")));
                }
                Ok(())
            }
            TriangularChain(n) | ParaSquareChain(n) | OrthoSquareChain(n) | ParaHexChain(n)
            | MetaChain(n) => at_least(key, "length", *n, 1),
        }
    }

    /// Order of the generated graph (without building it).
    pub fn vertex_count(&self) -> usize {
        use FamilySpec::*;
        match self {
            Path(n) | Cycle(n) | Complete(n) => *n,
            CompleteBipartite(m, n) => m + n,
            Star(n) | Wheel(n) => n + 1,
            DoubleStar(a, b) => a + b + 2,
            Ladder(n) | Prism(n) => 2 * n,
            Grid(m, n) => m * n,
            Book(n) => 2 * (n + 1),
            Friendship(n) => 2 * n + 1,
            GenFriendship { m, n } => n * (m - 1) + 1,
            Circulant(n, _) => *n,
            Qmn(m, n) => m * n,
            QmH { m, base, .. } => m * base.vertex_count(),
            TriangularChain(n) => 2 * n + 1,
            ParaSquareChain(n) | OrthoSquareChain(n) => 3 * n + 1,
            ParaHexChain(n) | MetaChain(n) => 5 * n + 1,
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        use FamilySpec::*;
        Ok(match self {
            Path(n) => path(*n),
            Cycle(n) => cycle(*n),
            Complete(n) => complete(*n),
            CompleteBipartite(m, n) => complete_bipartite(*m, *n),
            Star(n) => complete_bipartite(1, *n),
            DoubleStar(a, b) => double_star(*a, *b),
            Ladder(n) => path(2).cartesian_product(&path(*n)),
            Prism(n) => path(2).cartesian_product(&cycle(*n)),
            Grid(m, n) => path(*m).cartesian_product(&path(*n)),
            Book(n) => complete_bipartite(1, *n).cartesian_product(&path(2)),
            Wheel(n) => wheel(*n),
            Friendship(n) => flower(3, *n),
            GenFriendship { m, n } => flower(*m, *n),
            Circulant(n, s) => circulant_by_residue(*n, s)?,
            Qmn(m, n) => generate_qmh(*m, &complete(*n), 0)?,
            QmH { m, base, root } => generate_qmh(*m, &base.generate()?, *root)?,
            TriangularChain(n) => cactus_chain(ChainKind::Triangular, *n)?.graph,
            ParaSquareChain(n) => cactus_chain(ChainKind::ParaSquare, *n)?.graph,
            OrthoSquareChain(n) => cactus_chain(ChainKind::OrthoSquare, *n)?.graph,
            ParaHexChain(n) => cactus_chain(ChainKind::ParaHex, *n)?.graph,
            MetaChain(n) => cactus_chain(ChainKind::MetaHex, *n)?.graph,
        })
    }
}

pub fn path(n: usize) -> Graph {
    Graph::from_trusted_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::from_trusted_edges(n, (0..n).map(|i| edge(i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Graph {
    Graph::from_trusted_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    Graph::from_trusted_edges(m + n, (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v))))
}

fn double_star(a: usize, b: usize) -> Graph {
    let edges = std::iter::once((0, 1))
        .chain((0..a).map(|i| (0, 2 + i)))
        .chain((0..b).map(|i| (1, 2 + a + i)));
    Graph::from_trusted_edges(a + b + 2, edges)
}

fn wheel(n: usize) -> Graph {
    let spokes = (1..=n).map(|i| (0, i));
    let rim = (0..n).map(|i| edge(1 + i, 1 + (i + 1) % n));
    Graph::from_trusted_edges(n + 1, spokes.chain(rim))
}

/// `count` cycles of length `len` sharing vertex 0; cycle `j` uses vertices
/// `1 + j(len-1) ..= (j+1)(len-1)` in cyclic order.
fn flower(len: usize, count: usize) -> Graph {
    let mut edges = Vec::new();
    for j in 0..count {
        let first = 1 + j * (len - 1);
        let ring: Vec<usize> = std::iter::once(0).chain(first..first + len - 1).collect();
        for i in 0..len {
            edges.push(edge(ring[i], ring[(i + 1) % len]));
        }
    }
    Graph::from_trusted_edges(1 + count * (len - 1), edges)
}

/// Circulant graph with `i ~ j` whenever `|i - j| ≡ ±a (mod n)` for some `a`
/// in `residues`. Unlike [`FamilySpec::Circulant`], the residues need not be
/// reduced into `1..=n/2`; only multiples of `n` are rejected.
pub fn circulant_by_residue(n: usize, residues: &[usize]) -> Result<Graph> {
    if n < 3 {
        return Err(invalid("circulant", format!("n = {n}, need n >= 3")));
    }
    let mut edges = Vec::new();
    for &a in residues {
        let a = a % n;
        if a == 0 {
            return Err(invalid("circulant", "a residue is a multiple of n"));
        }
        for i in 0..n {
            edges.push(edge(i, (i + a) % n));
        }
    }
    Ok(Graph::from_trusted_edges(n, edges))
}

/// `K_m` with one copy of `h` attached at `root` to every clique vertex.
///
/// Copy `i` occupies labels `i * |V(h)| .. (i + 1) * |V(h)|` in `h`'s own
/// order; the clique joins the roots `i * |V(h)| + root`.
pub fn generate_qmh(m: usize, h: &Graph, root: usize) -> Result<Graph> {
    if m < 2 {
        return Err(invalid("qmh", format!("m = {m}, need m >= 2")));
    }
    let order = h.vertex_count();
    if root >= order {
        return Err(Error::VertexOutOfRange {
            vertex: root,
            n: order,
        });
    }
    let copies = (0..m).fold(Graph::empty(0), |acc, _| acc.disjoint_union(h));
    let roots: Vec<usize> = (0..m).map(|i| i * order + root).collect();
    let spine: Vec<Edge> = roots
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| roots[i + 1..].iter().map(move |&b| (a, b)))
        .collect();
    let mut edges = copies.edges();
    edges.extend(spine);
    Ok(Graph::from_trusted_edges(copies.vertex_count(), edges))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ChainKind {
    Triangular,
    ParaSquare,
    OrthoSquare,
    ParaHex,
    MetaHex,
}

impl ChainKind {
    pub fn cycle_len(self) -> usize {
        match self {
            ChainKind::Triangular => 3,
            ChainKind::ParaSquare | ChainKind::OrthoSquare => 4,
            ChainKind::ParaHex | ChainKind::MetaHex => 6,
        }
    }

    /// Position of the outgoing cut vertex along a cycle, counted from the
    /// incoming one: 1 = adjacent (ortho), 2 = meta, len/2 = para.
    pub fn cut_offset(self) -> usize {
        match self {
            ChainKind::Triangular | ChainKind::OrthoSquare => 1,
            ChainKind::ParaSquare | ChainKind::MetaHex => 2,
            ChainKind::ParaHex => 3,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CactusChain {
    pub graph: Graph,
    /// `cycles[i]` lists cycle `i` in cyclic order, starting at its incoming vertex.
    pub cycles: Vec<Vec<usize>>,
    /// `cut_vertices[i]` is shared by cycles `i` and `i + 1`.
    pub cut_vertices: Vec<usize>,
}

/// Chain of `length` cycles. Cycle 0 is `0, 1, .., L-1`; cycle `i > 0` starts
/// at the cut vertex it shares with cycle `i - 1` and continues with `L - 1`
/// fresh labels. The outgoing cut vertex of each cycle sits
/// [`ChainKind::cut_offset`] steps after its incoming one.
pub fn cactus_chain(kind: ChainKind, length: usize) -> Result<CactusChain> {
    if length == 0 {
        return Err(invalid("chain", "length = 0, need length >= 1"));
    }
    let len = kind.cycle_len();
    let mut cycles = Vec::with_capacity(length);
    let mut cut_vertices = Vec::with_capacity(length - 1);
    let mut edges = Vec::new();
    let mut start = 0;
    let mut next = 1;
    for i in 0..length {
        let ring: Vec<usize> = std::iter::once(start).chain(next..next + len - 1).collect();
        next += len - 1;
        for j in 0..len {
            edges.push(edge(ring[j], ring[(j + 1) % len]));
        }
        start = ring[kind.cut_offset()];
        if i + 1 < length {
            cut_vertices.push(start);
        }
        cycles.push(ring);
    }
    Ok(CactusChain {
        graph: Graph::from_trusted_edges(next, edges),
        cycles,
        cut_vertices,
    })
}

/// Result of rewriting `C_n(a, b)` as `C_n(1, c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CirculantReduction {
    pub c: usize,
    /// `relabel[i]` is the image of vertex `i` of `C_n(a, b)` in `C_n(1, c)`.
    pub relabel: Vec<usize>,
}

/// Multiplying labels by `a⁻¹ mod n` maps `C_n(a, b)` onto `C_n(1, c)` with
/// `c ≡ a⁻¹·b`, normalized into `1..=n/2`.
pub fn circulant_reduce(n: usize, a: usize, b: usize) -> Result<CirculantReduction> {
    if n < 3 {
        return Err(invalid("circulant", format!("n = {n}, need n >= 3")));
    }
    if a.is_multiple_of(n) || b.is_multiple_of(n) {
        return Err(invalid("circulant", "a residue is a multiple of n"));
    }
    let (g, inv) = inverse_mod(a % n, n);
    if g != 1 {
        return Err(Error::NotInvertible { a, n, gcd: g });
    }
    let c = inv * (b % n) % n;
    let c = c.min(n - c);
    let relabel = (0..n).map(|i| inv * i % n).collect();
    Ok(CirculantReduction { c, relabel })
}

/// Returns `(gcd(a, n), x)` with `a·x ≡ gcd (mod n)`.
fn inverse_mod(a: usize, n: usize) -> (usize, usize) {
    let (mut r0, mut r1) = (n as i64, a as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0 as usize, t0.rem_euclid(n as i64) as usize)
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        let key = self.key();
        match self {
            Path(n) | Cycle(n) | Complete(n) | Star(n) | Ladder(n) | Prism(n) | Book(n)
            | Wheel(n) | Friendship(n) | TriangularChain(n) | ParaSquareChain(n)
            | OrthoSquareChain(n) | ParaHexChain(n) | MetaChain(n) => write!(f, "{key}:{n}"),
            CompleteBipartite(a, b) | DoubleStar(a, b) | Grid(a, b) | Qmn(a, b) => {
                write!(f, "{key}:{a}x{b}")
            }
            GenFriendship { m, n } => write!(f, "{key}:{m}x{n}"),
            Circulant(n, s) => {
                let s: Vec<String> = s.iter().map(ToString::to_string).collect();
                write!(f, "{key}:{n}:{}", s.join(","))
            }
            QmH { m, base, root } => write!(f, "{key}:{m}:{root}:{base}"),
        }
    }
}

impl Serialize for FamilySpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn parse_num(text: &str, whole: &str) -> Result<usize> {
    text.trim()
        .parse()
        .map_err(|_| invalid_spec(whole, format!("`{text}` is not a non-negative integer")))
}

fn invalid_spec(whole: &str, reason: String) -> Error {
    Error::InvalidParameters {
        family: "spec",
        reason: format!("{whole}: {reason}"),
    }
}

/// A single-integer or `AxB` family, from its key.
fn build(key: &str, a: usize, b: Option<usize>, whole: &str) -> Result<FamilySpec> {
    use FamilySpec::*;
    let one = |f: fn(usize) -> FamilySpec| match b {
        None => Ok(f(a)),
        Some(_) => Err(invalid_spec(whole, format!("`{key}` takes one parameter"))),
    };
    let two = |f: fn(usize, usize) -> FamilySpec| match b {
        Some(b) => Ok(f(a, b)),
        None => Err(invalid_spec(whole, format!("`{key}` takes `AxB`"))),
    };
    match key {
        "path" => one(Path),
        "cycle" => one(Cycle),
        "complete" => one(Complete),
        "star" => one(Star),
        "ladder" => one(Ladder),
        "prism" => one(Prism),
        "book" => one(Book),
        "wheel" => one(Wheel),
        "friendship" => one(Friendship),
        "tchain" => one(TriangularChain),
        "qchain" => one(ParaSquareChain),
        "ochain" => one(OrthoSquareChain),
        "hchain" => one(ParaHexChain),
        "mchain" => one(MetaChain),
        "bipartite" => two(CompleteBipartite),
        "dstar" => two(DoubleStar),
        "grid" => two(Grid),
        "qmn" => two(Qmn),
        "flower" => two(|m, n| GenFriendship { m, n }),
        other => Err(Error::UnknownFamily(other.to_string())),
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Grammar: `path:7`, `grid:3x5`, `circulant:12:1,3`, `qmh:3:1:path:3`.
    fn from_str(s: &str) -> Result<Self> {
        let specs = parse_range(s)?;
        match specs.as_slice() {
            [one] => Ok(one.clone()),
            _ => Err(invalid_spec(s, "ranges are not allowed here".into())),
        }
    }
}

fn parse_range_part(text: &str, whole: &str) -> Result<Vec<usize>> {
    match text.split_once("..") {
        Some((lo, hi)) => {
            let (lo, hi) = (parse_num(lo, whole)?, parse_num(hi, whole)?);
            if lo > hi {
                return Err(invalid_spec(whole, format!("empty range {lo}..{hi}")));
            }
            Ok((lo..=hi).collect())
        }
        None => Ok(vec![parse_num(text, whole)?]),
    }
}

/// Expands a spec with optional inclusive ranges, e.g. `cycle:4..12`,
/// `grid:2..4x2..4`, `circulant:6..16:1,3`, into concrete specs in sweep
/// order (first parameter outermost). Every expanded spec is validated.
pub fn parse_range(s: &str) -> Result<Vec<FamilySpec>> {
    let s = s.trim();
    let (key, rest) = s
        .split_once(':')
        .ok_or_else(|| invalid_spec(s, "expected `family:params`".into()))?;
    let key = key.trim().to_ascii_lowercase();
    let specs = match key.as_str() {
        "circulant" => {
            let (n, set) = rest
                .split_once(':')
                .ok_or_else(|| invalid_spec(s, "expected `circulant:n:a1,a2,..`".into()))?;
            let set = set
                .split(',')
                .map(|a| parse_num(a, s))
                .collect::<Result<Vec<_>>>()?;
            parse_range_part(n, s)?
                .into_iter()
                .map(|n| FamilySpec::Circulant(n, set.clone()))
                .collect()
        }
        "qmh" => {
            let mut parts = rest.splitn(3, ':');
            let (m, root, base) = match (parts.next(), parts.next(), parts.next()) {
                (Some(m), Some(root), Some(base)) => (m, root, base),
                _ => {
                    return Err(invalid_spec(
                        s,
                        "expected `qmh:m:root:<family spec>`".into(),
                    ))
                }
            };
            let root = parse_num(root, s)?;
            let base: FamilySpec = base.parse()?;
            parse_range_part(m, s)?
                .into_iter()
                .map(|m| FamilySpec::QmH {
                    m,
                    base: Box::new(base.clone()),
                    root,
                })
                .collect()
        }
        _ => {
            // a range's `..` never contains `x`, so split on the separator first
            match rest.split_once('x') {
                Some((a, b)) => {
                    let (xs, ys) = (parse_range_part(a, s)?, parse_range_part(b, s)?);
                    let mut out = Vec::new();
                    for &a in &xs {
                        for &b in &ys {
                            out.push(build(&key, a, Some(b), s)?);
                        }
                    }
                    out
                }
                None => parse_range_part(rest, s)?
                    .into_iter()
                    .map(|a| build(&key, a, None, s))
                    .collect::<Result<Vec<_>>>()?,
            }
        }
    };
    for spec in &specs {
        spec.validate()?;
    }
    Ok(specs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circulant_6_13_is_k33() {
        let g = FamilySpec::Circulant(6, vec![1, 3]).generate().unwrap();
        assert_eq!(g.edge_count(), 9);
        assert!((0..6).all(|v| g.degree(v) == 3));
        // bipartition by parity, every odd-even pair adjacent
        for u in (0..6).step_by(2) {
            for v in (1..6).step_by(2) {
                assert!(g.has_edge(u, v));
            }
            assert!(!g.has_edge(u, (u + 2) % 6));
        }
    }

    #[test]
    fn triangular_chain_two() {
        let ch = cactus_chain(ChainKind::Triangular, 2).unwrap();
        assert_eq!((ch.graph.vertex_count(), ch.graph.edge_count()), (5, 6));
        assert_eq!(ch.cut_vertices, vec![1]);
        let (rest, _) = ch.graph.delete_vertices(&[1]).unwrap();
        assert_eq!(rest.components().len(), 2);
    }

    #[test]
    fn friendship_is_flower_of_triangles() {
        for n in 1..5 {
            assert_eq!(
                FamilySpec::Friendship(n).generate().unwrap(),
                FamilySpec::GenFriendship { m: 3, n }.generate().unwrap()
            );
        }
    }

    #[test]
    fn grid_3x3() {
        let g = FamilySpec::Grid(3, 3).generate().unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (9, 12));
    }

    #[test]
    fn qmh_examples() {
        let net = generate_qmh(3, &path(2), 0).unwrap();
        assert_eq!((net.vertex_count(), net.edge_count()), (6, 6));
        let degrees: Vec<usize> = (0..6).map(|v| net.degree(v)).collect();
        assert_eq!(degrees.iter().filter(|&&d| d == 3).count(), 3);
        assert_eq!(degrees.iter().filter(|&&d| d == 1).count(), 3);

        let g = generate_qmh(2, &path(3), 1).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (1, 4), (3, 4), (4, 5)]);

        assert!(generate_qmh(1, &path(2), 0).is_err());
        assert!(generate_qmh(2, &path(2), 2).is_err());
    }

    #[test]
    fn qmn_sizes() {
        let g = FamilySpec::Qmn(3, 3).generate().unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (9, 3 + 3 * 3));
    }

    #[test]
    fn validation_errors() {
        assert!(FamilySpec::Circulant(8, vec![1, 5]).generate().is_err());
        assert!(FamilySpec::Circulant(8, vec![3, 1]).generate().is_err());
        assert!(FamilySpec::Prism(2).generate().is_err());
        assert!(FamilySpec::TriangularChain(0).generate().is_err());
        assert!(FamilySpec::GenFriendship { m: 2, n: 3 }.generate().is_err());
    }

    #[test]
    fn circulant_by_residue_wraps() {
        // 3 ≡ -1 (mod 4), so C_4(1,3) is the 4-cycle
        assert_eq!(circulant_by_residue(4, &[1, 3]).unwrap(), cycle(4));
        assert_eq!(circulant_by_residue(5, &[1, 3]).unwrap(), complete(5));
        assert!(circulant_by_residue(4, &[4]).is_err());
    }

    #[test]
    fn circulant_reduce_examples() {
        let r = circulant_reduce(8, 3, 1).unwrap();
        assert_eq!(r.c, 3);
        let r = circulant_reduce(12, 1, 5).unwrap();
        assert_eq!(r.c, 5);
        assert_eq!(r.relabel, (0..12).collect::<Vec<_>>());
        let r = circulant_reduce(9, 2, 6).unwrap();
        assert_eq!(r.c, 3);
        assert_eq!(r.relabel[1], 5);
        assert_eq!(
            circulant_reduce(8, 2, 1),
            Err(Error::NotInvertible { a: 2, n: 8, gcd: 2 })
        );
    }

    #[test]
    fn spec_strings_round_trip() {
        for s in [
            "path:7",
            "circulant:12:1,3",
            "grid:3x5",
            "tchain:4",
            "flower:5x3",
            "qmh:3:1:path:3",
            "bipartite:3x2",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert_eq!("Path:3".parse::<FamilySpec>().unwrap(), FamilySpec::Path(3));
    }

    #[test]
    fn spec_ranges_expand_in_order() {
        let specs = parse_range("cycle:4..12").unwrap();
        assert_eq!(specs.len(), 9);
        assert_eq!(specs[0], FamilySpec::Cycle(4));
        let specs = parse_range("grid:2..3x2..4").unwrap();
        assert_eq!(specs.len(), 6);
        assert_eq!(specs[1], FamilySpec::Grid(2, 3));
        let specs = parse_range("circulant:6..8:1,3").unwrap();
        assert_eq!(specs[2], FamilySpec::Circulant(8, vec![1, 3]));
    }

    #[test]
    fn spec_parse_errors() {
        assert_eq!(
            "blob:3".parse::<FamilySpec>(),
            Err(Error::UnknownFamily("blob".into()))
        );
        assert!("path".parse::<FamilySpec>().is_err());
        assert!("path:x".parse::<FamilySpec>().is_err());
        assert!("grid:3".parse::<FamilySpec>().is_err());
        assert!("cycle:4..6".parse::<FamilySpec>().is_err());
        assert!("cycle:2".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn vertex_count_matches_generate() {
        for s in [
            "path:5",
            "cycle:6",
            "complete:4",
            "bipartite:2x3",
            "star:4",
            "dstar:2x3",
            "ladder:4",
            "prism:5",
            "grid:3x4",
            "book:3",
            "wheel:5",
            "friendship:3",
            "flower:4x3",
            "circulant:10:1,3",
            "qmn:3x4",
            "qmh:3:0:cycle:4",
            "tchain:3",
            "qchain:3",
            "ochain:3",
            "hchain:2",
            "mchain:2",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(
                spec.generate().unwrap().vertex_count(),
                spec.vertex_count(),
                "{s}"
            );
        }
    }
}
