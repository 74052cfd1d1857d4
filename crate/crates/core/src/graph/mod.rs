//! The graph kernel: dense bitset adjacency, graph6, canonical labeling,
//! blow-ups, twin classes and isomorph-free enumeration.

mod canon;
mod enumerate;
mod graph6;

pub use canon::{are_isomorphic, canonical_form, canonical_labeling, CanonicalLabeling};
pub use enumerate::{
    enumerate_graphs, for_each_graph, for_each_graph_up_to, EnumerationError, EnumerationPlan,
    Filter, MAX_UNRESTRICTED_ORDER,
};
pub use graph6::{from_graph6, to_graph6, Graph6Error, GRAPH6_MAX_ORDER};

use crate::bits::{self, words_for, VertexSet};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Largest order a [`Graph`] may have.
pub const MAX_ORDER: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("order {0} exceeds the supported maximum of {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("weight vector has {got} entries, graph has {expected} vertices")]
    WeightLength { expected: usize, got: usize },
    #[error("blow-up weight of vertex {0} is zero")]
    ZeroWeight(usize),
}

/// A simple undirected graph on vertices `0..n`.
///
/// Each vertex owns a row of `words_for(n)` words; the matrix is kept
/// symmetric and irreflexive by every mutator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    ///
    /// Panics if `n > MAX_ORDER`; use [`Graph::try_empty`] for a checked variant.
    pub fn empty(n: usize) -> Self {
        Self::try_empty(n).expect("graph order out of range")
    }

    pub fn try_empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        let words = words_for(n).max(1);
        Ok(Graph {
            n,
            words,
            adj: vec![0; n * words],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::try_empty(n)?;
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: x,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// The cycle `0-1-…-(n-1)-0`; for `n < 3` this degenerates to a path.
    pub fn cycle(n: usize) -> Self {
        let mut g = Self::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// Complete multipartite graph; class `i` occupies a consecutive block
    /// of `sizes[i]` vertices.
    pub fn complete_multipartite(sizes: &[usize]) -> Self {
        let n = sizes.iter().sum();
        let mut g = Self::empty(n);
        let mut class = Vec::with_capacity(n);
        for (i, &s) in sizes.iter().enumerate() {
            class.extend(std::iter::repeat_n(i, s));
        }
        for u in 0..n {
            for v in u + 1..n {
                if class[u] != class[v] {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        bits::count(&self.adj) / 2
    }

    #[inline]
    pub fn row_words(&self) -> usize {
        self.words
    }

    /// Neighborhood of `v` as a packed row.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bits::test(self.row(u), v)
    }

    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        let w = self.words;
        bits::set(&mut self.adj[u * w..(u + 1) * w], v);
        bits::set(&mut self.adj[v * w..(v + 1) * w], u);
    }

    #[inline]
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        let w = self.words;
        bits::clear(&mut self.adj[u * w..(u + 1) * w], v);
        bits::clear(&mut self.adj[v * w..(v + 1) * w], u);
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        bits::count(self.row(v))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn neighbors(&self, v: usize) -> bits::Ones<'_> {
        bits::ones(self.row(v))
    }

    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        VertexSet::from_words(self.row(v).to_vec())
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Non-adjacent pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).filter(move |&v| !self.has_edge(u, v)).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Subgraph induced on `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// `G - v`, with vertices above `v` shifted down by one.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&x| x != v).collect();
        self.induced(&keep)
    }

    /// Appends a vertex adjacent to `neighbors`.
    pub fn with_vertex(&self, neighbors: impl IntoIterator<Item = usize>) -> Graph {
        let mut g = Graph::empty(self.n + 1);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for v in neighbors {
            g.add_edge(self.n, v);
        }
        g
    }

    /// Relabels so that vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// True iff `vertices` are pairwise adjacent.
    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }

    /// True iff `vertices` are pairwise non-adjacent.
    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Number of edges between two disjoint vertex lists.
    pub fn edges_between(&self, a: &[usize], b: &[usize]) -> usize {
        a.iter()
            .map(|&u| b.iter().filter(|&&v| self.has_edge(u, v)).count())
            .sum()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, e={}, ", self.n, self.size())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PartitionKind {
    TwinClasses,
    Coloring,
    RPartition,
}

/// A labeled family of disjoint, non-empty vertex blocks.
///
/// Blocks are kept sorted internally and ordered by their smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    pub kind: PartitionKind,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(kind: PartitionKind, blocks: Vec<Vec<usize>>) -> Self {
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .filter(|b| !b.is_empty())
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort_by_key(|b| b[0]);
        let p = Partition { kind, blocks };
        debug_assert!(p.is_disjoint());
        p
    }

    /// Groups vertices by a label, e.g. a color index.
    pub fn from_labels(kind: PartitionKind, labels: &[usize]) -> Self {
        let mut by: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (v, &c) in labels.iter().enumerate() {
            by.entry(c).or_default().push(v);
        }
        Partition::new(kind, by.into_values().collect())
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self, v: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.binary_search(&v).is_ok())
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn covered(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    fn is_disjoint(&self) -> bool {
        let mut all: Vec<usize> = self.blocks.iter().flatten().copied().collect();
        let len = all.len();
        all.sort_unstable();
        all.dedup();
        all.len() == len
    }

    /// True iff the blocks are disjoint and cover exactly `0..n`.
    pub fn covers(&self, n: usize) -> bool {
        self.is_disjoint() && self.covered() == n && self.blocks.iter().flatten().all(|&v| v < n)
    }
}

/// Per-vertex blow-up multiplicities, each at least one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightVector(Vec<usize>);

impl WeightVector {
    pub fn new(weights: Vec<usize>) -> Result<Self, GraphError> {
        if let Some(v) = weights.iter().position(|&w| w == 0) {
            return Err(GraphError::ZeroWeight(v));
        }
        Ok(WeightVector(weights))
    }

    pub fn uniform(len: usize, weight: usize) -> Result<Self, GraphError> {
        Self::new(vec![weight; len])
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

/// Replaces every vertex `v` by an independent set of `w[v]` copies.
///
/// Copies of `v` occupy a consecutive block, blocks in vertex order.
pub fn blow_up(g: &Graph, w: &WeightVector) -> Result<Graph, GraphError> {
    let weights = w.as_slice();
    if weights.len() != g.order() {
        return Err(GraphError::WeightLength {
            expected: g.order(),
            got: weights.len(),
        });
    }
    let total = w.total();
    let mut out = Graph::try_empty(total)?;
    let mut start = Vec::with_capacity(g.order() + 1);
    let mut acc = 0;
    for &x in weights {
        start.push(acc);
        acc += x;
    }
    start.push(acc);
    for (u, v) in g.edges() {
        for a in start[u]..start[u + 1] {
            for b in start[v]..start[v + 1] {
                out.add_edge(a, b);
            }
        }
    }
    Ok(out)
}

/// Number of edges of `blow_up(g, w)`, computed without building it.
pub fn blow_up_size(g: &Graph, weights: &[usize]) -> u64 {
    g.edges()
        .map(|(u, v)| weights[u] as u64 * weights[v] as u64)
        .sum()
}

/// Classes of vertices with identical open neighborhoods.
pub fn twin_classes(g: &Graph) -> Partition {
    let mut by_row: BTreeMap<&[u64], Vec<usize>> = BTreeMap::new();
    for v in 0..g.order() {
        by_row.entry(g.row(v)).or_default().push(v);
    }
    Partition::new(PartitionKind::TwinClasses, by_row.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builders_keep_matrix_symmetric() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (3, 0)]).unwrap();
        for u in 0..4 {
            assert!(!g.has_edge(u, u));
            for v in 0..4 {
                assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
        assert_eq!(g.size(), 3);
        assert_eq!(g.degrees(), vec![2, 2, 1, 1]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 })
        ));
        assert_eq!(Graph::try_empty(MAX_ORDER + 1), Err(GraphError::OrderTooLarge(MAX_ORDER + 1)));
    }

    #[test]
    fn blow_up_examples() {
        let k3 = Graph::complete(3);
        let t = blow_up(&k3, &WeightVector::uniform(3, 2).unwrap()).unwrap();
        assert_eq!(t, Graph::complete_multipartite(&[2, 2, 2]));

        let k34 = blow_up(&Graph::complete(2), &WeightVector::new(vec![3, 4]).unwrap()).unwrap();
        assert_eq!(k34.size(), 12);
        assert_eq!(k34, Graph::complete_multipartite(&[3, 4]));

        let c5 = Graph::cycle(5);
        assert_eq!(blow_up(&c5, &WeightVector::uniform(5, 1).unwrap()).unwrap(), c5);
    }

    #[test]
    fn blow_up_rejects_zero_and_length_mismatch() {
        assert_eq!(WeightVector::new(vec![1, 0]), Err(GraphError::ZeroWeight(1)));
        let w = WeightVector::new(vec![1, 1]).unwrap();
        assert!(matches!(
            blow_up(&Graph::complete(3), &w),
            Err(GraphError::WeightLength { expected: 3, got: 2 })
        ));
    }

    #[test]
    fn twin_classes_examples() {
        let t73 = Graph::complete_multipartite(&[3, 2, 2]);
        let mut sizes = twin_classes(&t73).block_sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 2, 3]);
        assert_eq!(twin_classes(&Graph::cycle(5)).len(), 5);
    }

    #[test]
    fn partition_from_labels_orders_blocks() {
        let p = Partition::from_labels(PartitionKind::Coloring, &[1, 0, 1, 2]);
        assert_eq!(p.blocks(), &[vec![0, 2], vec![1], vec![3]]);
        assert_eq!(p.block_of(2), Some(0));
        assert!(p.covers(4));
    }
}
