//! Simple undirected graphs stored as a symmetric bit matrix.
//!
//! A [`Graph`] is an immutable value. Every structural operation returns a
//! fresh graph; deletions additionally return a [`VertexMap`] so callers can
//! translate results back to the labels of the input graph.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// An unordered vertex pair, always stored with `u < v`.
pub type Edge = (usize, usize);

/// Normalizes a vertex pair so the smaller endpoint comes first.
pub fn edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

/// Old-to-new label translation produced by vertex deletion and component
/// extraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    /// `old_to_new[v]` is the new label of old vertex `v`, if it survived.
    pub old_to_new: Vec<Option<usize>>,
    /// `new_to_old[w]` is the original label of new vertex `w`.
    pub new_to_old: Vec<usize>,
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one.
    pub fn new(n: usize, edges: &[Edge]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            g.set(u, v, true);
        }
        Ok(g)
    }

    pub(crate) fn from_trusted_edges<I: IntoIterator<Item = Edge>>(n: usize, edges: I) -> Self {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            debug_assert!(u != v && u < n && v < n);
            g.set(u, v, true);
        }
        g
    }

    fn set(&mut self, u: usize, v: usize, on: bool) {
        let (wu, bu) = (u * self.words + v / 64, v % 64);
        let (wv, bv) = (v * self.words + u / 64, u % 64);
        if on {
            self.bits[wu] |= 1 << bu;
            self.bits[wv] |= 1 << bv;
        } else {
            self.bits[wu] &= !(1 << bu);
            self.bits[wv] &= !(1 << bv);
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.bits
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.row(v).iter().all(|&w| w == 0)
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.is_isolated(v)).collect()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        (0..self.n).any(|v| self.is_isolated(v))
    }

    /// Neighborhood bitmasks, one `u64` per vertex. `None` above 64 vertices.
    pub fn neighbor_masks(&self) -> Option<Vec<u64>> {
        (self.words <= 1).then(|| (0..self.n).map(|v| self.bits[v]).collect())
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        (0..self.n)
            .flat_map(|u| {
                self.neighbors(u)
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    /// Whether `vs` is pairwise adjacent.
    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| self.has_edge(a, b)))
    }

    /// Induced subgraph on the vertices not in `removed`, densely relabeled.
    pub fn delete_vertices(&self, removed: &[usize]) -> Result<(Graph, VertexMap)> {
        let mut gone = vec![false; self.n];
        for &v in removed {
            self.check_vertex(v)?;
            gone[v] = true;
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| !gone[v]).collect();
        Ok(self.induced(&keep))
    }

    /// Induced subgraph on `keep` (in the given order).
    pub fn induced(&self, keep: &[usize]) -> (Graph, VertexMap) {
        let mut old_to_new = vec![None; self.n];
        for (i, &v) in keep.iter().enumerate() {
            old_to_new[v] = Some(i);
        }
        let mut g = Graph::empty(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            for u in self.neighbors(v) {
                if let Some(j) = old_to_new[u] {
                    g.set(i, j, true);
                }
            }
        }
        let map = VertexMap {
            old_to_new,
            new_to_old: keep.to_vec(),
        };
        (g, map)
    }

    /// Same vertex set with the given edges removed. Every edge must exist.
    pub fn delete_edges(&self, removed: &[Edge]) -> Result<Graph> {
        let mut g = self.clone();
        for &(u, v) in removed {
            if !self.has_edge(u, v) {
                return Err(Error::MissingEdge(u, v));
            }
            g.set(u, v, false);
        }
        Ok(g)
    }

    /// Vertex-disjoint union; `other`'s vertices are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self.edges().into_iter().chain(
            other
                .edges()
                .into_iter()
                .map(|(u, v)| (u + shift, v + shift)),
        );
        Graph::from_trusted_edges(self.n + other.n, edges)
    }

    /// Cartesian product. Vertex `(g, h)` gets label `g * |V(other)| + h`.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let m = other.n;
        let mut edges = Vec::new();
        for g in 0..self.n {
            for (a, b) in other.edges() {
                edges.push((g * m + a, g * m + b));
            }
        }
        for (a, b) in self.edges() {
            for h in 0..m {
                edges.push((a * m + h, b * m + h));
            }
        }
        Graph::from_trusted_edges(self.n * m, edges)
    }

    /// Identifies vertex `u` of `self` with vertex `v` of `other`.
    ///
    /// The vertices of `self` keep their labels; the remaining vertices of
    /// `other` follow in increasing order.
    pub fn point_attach(&self, other: &Graph, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        other.check_vertex(v)?;
        self.r_glue(other, &[u], &[v])
    }

    /// Identifies clique `left[i]` of `self` with clique `right[i]` of `other`.
    ///
    /// With empty slices this is the disjoint union. Labels follow
    /// [`Graph::point_attach`]: `self` first, then the unmatched vertices of
    /// `other` in increasing order.
    pub fn r_glue(&self, other: &Graph, left: &[usize], right: &[usize]) -> Result<Graph> {
        if left.len() != right.len() {
            return Err(Error::GlueSizeMismatch {
                left: left.len(),
                right: right.len(),
            });
        }
        for &v in left {
            self.check_vertex(v)?;
        }
        for &v in right {
            other.check_vertex(v)?;
        }
        if !distinct(left) || !self.is_clique(left) {
            return Err(Error::NotAClique(left.to_vec()));
        }
        if !distinct(right) || !other.is_clique(right) {
            return Err(Error::NotAClique(right.to_vec()));
        }
        let mut label = vec![usize::MAX; other.n];
        for (&a, &b) in left.iter().zip(right) {
            label[b] = a;
        }
        let mut next = self.n;
        for l in label.iter_mut().filter(|l| **l == usize::MAX) {
            *l = next;
            next += 1;
        }
        let edges = self.edges().into_iter().chain(
            other
                .edges()
                .into_iter()
                .map(|(a, b)| edge(label[a], label[b])),
        );
        Ok(Graph::from_trusted_edges(next, edges))
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for u in self.neighbors(v) {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// Largest BFS distance over all pairs, or `None` if disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for s in 0..self.n {
            for d in self.distances_from(s) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.distances_from(0).iter().all(Option::is_some)
    }

    /// Connected components as induced subgraphs, ordered by smallest vertex.
    pub fn components(&self) -> Vec<(Graph, VertexMap)> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut members: Vec<usize> = self
                .distances_from(s)
                .iter()
                .enumerate()
                .filter_map(|(v, d)| d.map(|_| v))
                .collect();
            members.sort_unstable();
            for &v in &members {
                seen[v] = true;
            }
            out.push(self.induced(&members));
        }
        out
    }

    /// Greedy clique (highest degree first); a lower bound on the clique number.
    pub fn greedy_clique(&self) -> Vec<usize> {
        let mut best = Vec::new();
        for start in 0..self.n {
            let mut clique = vec![start];
            let mut cands: Vec<usize> = self.neighbors(start).collect();
            cands.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
            for v in cands {
                if clique.iter().all(|&c| self.has_edge(c, v)) {
                    clique.push(v);
                }
            }
            if clique.len() > best.len() {
                best = clique;
            }
        }
        best
    }

    /// Smallest-last (degeneracy) ordering, reversed so that the vertices
    /// removed last come first.
    pub fn degeneracy_order(&self) -> Vec<usize> {
        let mut deg: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut removed = vec![false; self.n];
        let mut order = Vec::with_capacity(self.n);
        for _ in 0..self.n {
            let v = (0..self.n)
                .filter(|&v| !removed[v])
                .min_by_key(|&v| (deg[v], v))
                .unwrap();
            removed[v] = true;
            order.push(v);
            for u in self.neighbors(v) {
                if !removed[u] {
                    deg[u] -= 1;
                }
            }
        }
        order.reverse();
        order
    }
}

fn distinct(vs: &[usize]) -> bool {
    let mut sorted = vs.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).all(|w| w[0] != w[1])
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let edges: Vec<Edge> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn make_graph_examples() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.edges(), vec![(0, 1)]);
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.edge_count(), 3);
        let e3 = Graph::new(3, &[]).unwrap();
        assert_eq!(e3.edge_count(), 0);
        assert_eq!(e3.isolated_vertices(), vec![0, 1, 2]);
    }

    #[test]
    fn make_graph_collapses_duplicates() {
        let g = Graph::new(3, &[(0, 1), (1, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn make_graph_errors() {
        assert_eq!(
            Graph::new(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(Graph::new(2, &[(1, 1)]), Err(Error::LoopEdge(1)));
    }

    #[test]
    fn wide_graphs_span_several_words() {
        let g = path(130);
        assert_eq!(g.edge_count(), 129);
        assert!(g.has_edge(63, 64));
        assert!(g.has_edge(128, 129));
        assert_eq!(g.neighbors(64).collect::<Vec<_>>(), vec![63, 65]);
        assert!(g.neighbor_masks().is_none());
        assert_eq!(g.diameter(), Some(129));
    }

    #[test]
    fn delete_vertices_examples() {
        let (g, map) = path(4).delete_vertices(&[3]).unwrap();
        assert_eq!(g, path(3));
        assert_eq!(map.new_to_old, vec![0, 1, 2]);

        let (g, map) = path(4).delete_vertices(&[1]).unwrap();
        assert_eq!(g.edges(), vec![(1, 2)]);
        assert_eq!(g.components().len(), 2);
        assert_eq!(map.old_to_new, vec![Some(0), None, Some(1), Some(2)]);

        let k33 = Graph::new(
            6,
            &[
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 5),
            ],
        )
        .unwrap();
        let (g, _) = k33.delete_vertices(&[0, 1, 2]).unwrap();
        assert_eq!(g, Graph::empty(3));

        assert!(path(3).delete_vertices(&[3]).is_err());
        assert_eq!(path(5).delete_vertices(&[]).unwrap().0, path(5));
    }

    #[test]
    fn delete_edges_examples() {
        let g = cycle(5).delete_edges(&[(0, 4)]).unwrap();
        assert_eq!(g, path(5));
        let g = path(2).delete_edges(&[(1, 0)]).unwrap();
        assert_eq!(g, Graph::empty(2));
        assert_eq!(
            path(3).delete_edges(&[(0, 2)]),
            Err(Error::MissingEdge(0, 2))
        );
    }

    #[test]
    fn cycle_edge_removal_into_long_path_and_two_k2() {
        // n = 4k + 2 with k = 2: dropping v10v1, v6v7, v8v9 leaves P_6 and two P_2
        let g = cycle(10).delete_edges(&[(9, 0), (5, 6), (7, 8)]).unwrap();
        let mut sizes: Vec<usize> = g
            .components()
            .iter()
            .map(|(c, _)| c.vertex_count())
            .collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 2, 6]);
        for (c, _) in g.components() {
            assert_eq!(c.edge_count(), c.vertex_count() - 1);
        }
    }

    #[test]
    fn disjoint_union_examples() {
        let g = Graph::empty(1).disjoint_union(&path(2));
        assert_eq!((g.vertex_count(), g.edges()), (3, vec![(1, 2)]));
        assert_eq!(path(3).disjoint_union(&path(3)).components().len(), 2);
    }

    #[test]
    fn cartesian_product_examples() {
        let sq = path(2).cartesian_product(&path(2));
        assert_eq!(sq.edge_count(), 4);
        assert!((0..4).all(|v| sq.degree(v) == 2));
        assert!(sq.is_connected());

        let ladder = path(2).cartesian_product(&path(5));
        assert_eq!((ladder.vertex_count(), ladder.edge_count()), (10, 13));
    }

    #[test]
    fn point_attach_examples() {
        let p3 = path(2).point_attach(&path(2), 1, 0).unwrap();
        assert_eq!(p3, path(3));
        assert!(path(2).point_attach(&path(2), 2, 0).is_err());
    }

    #[test]
    fn r_glue_examples() {
        let g = path(3).r_glue(&path(2), &[], &[]).unwrap();
        assert_eq!(g, path(3).disjoint_union(&path(2)));

        let k5 = complete(4)
            .r_glue(&complete(5), &[0, 1, 2, 3], &[4, 3, 2, 1])
            .unwrap();
        assert_eq!(k5, complete(5));
        let k6 = complete(5)
            .r_glue(&complete(6), &[0, 1, 2, 3, 4], &[0, 1, 2, 3, 4])
            .unwrap();
        assert_eq!(k6, complete(6));

        assert!(matches!(
            path(3).r_glue(&path(3), &[0, 2], &[0, 1]),
            Err(Error::NotAClique(_))
        ));
        assert!(matches!(
            path(3).r_glue(&path(3), &[0, 1], &[0]),
            Err(Error::GlueSizeMismatch { .. })
        ));
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(complete(5).diameter(), Some(1));
        assert_eq!(path(4).diameter(), Some(3));
        assert_eq!(Graph::empty(2).diameter(), None);
        for n in 3..12 {
            assert_eq!(cycle(n).diameter(), Some(n / 2));
        }
    }

    #[test]
    fn components_examples() {
        let g = path(3).disjoint_union(&Graph::empty(1));
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[1].1.new_to_old, vec![3]);
        assert_eq!(cycle(6).components().len(), 1);
        assert_eq!(Graph::empty(4).components().len(), 4);
    }

    #[test]
    fn degeneracy_order_is_a_permutation() {
        let mut order = cycle(7).degeneracy_order();
        order.sort_unstable();
        assert_eq!(order, (0..7).collect::<Vec<_>>());
    }
}
