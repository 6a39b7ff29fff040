//! Simple undirected graphs stored as adjacency bitsets, plus the exact
//! clique/independence kernels and the graph6 / edge-list codecs.

pub(crate) mod bitset;
mod clique;
mod edgelist;
mod generators;
mod graph6;

use std::fmt;

use thiserror::Error;

pub use clique::{
    clique_number, find_clique, find_independent_set, independence_number, max_clique,
    max_independent_set,
};
pub(crate) use clique::{has_clique_within, CliqueScratch};
pub use edgelist::{decode_edge_list, encode_edge_list};
pub use generators::{blow_up, circulant, disjoint_union, shearer_floor, BlowUp};
pub use graph6::{graph6_decode, graph6_encode, GRAPH6_MAX_VERTICES};

/// Largest vertex count a [`Graph`] may have.
pub const MAX_VERTICES: usize = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count {0} exceeds the supported maximum {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("graphs have different vertex counts ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("residue 0 in connection set would create loops")]
    ZeroResidue,
    #[error("residue {residue} out of range for modulus {modulus}")]
    ResidueOutOfRange { residue: usize, modulus: usize },
    #[error("modulus must be at least 1")]
    ZeroModulus,
    #[error("size list has length {got}, expected {expected}")]
    SizeListLength { got: usize, expected: usize },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
}

/// Undirected simple graph on vertices `0..n`.
///
/// Graphs are immutable once built; use [`GraphBuilder`] or the
/// value-returning editors (`with_edge`, `without_edges`, ...).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
    edge_count: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        assert!(n <= MAX_VERTICES, "graph too large");
        let words = bitset::words_for(n);
        Graph {
            n,
            words,
            adj: vec![0; n * words],
            edge_count: 0,
        }
    }

    pub fn complete(n: usize) -> Graph {
        Graph::empty(n).complement()
    }

    /// Builds a graph from an edge iterator. Duplicates are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut b = GraphBuilder::new(n)?;
        for (u, v) in edges {
            if b.has_edge(u, v)? {
                let (a, c) = if u < v { (u, v) } else { (v, u) };
                return Err(GraphError::DuplicateEdge(a, c));
            }
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub(crate) fn from_rows(n: usize, adj: Vec<u64>) -> Graph {
        let words = bitset::words_for(n);
        debug_assert_eq!(adj.len(), n * words);
        let edge_count = bitset::count(&adj) / 2;
        let g = Graph {
            n,
            words,
            adj,
            edge_count,
        };
        debug_assert!(g.check_invariants());
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub(crate) fn words(&self) -> usize {
        self.words
    }

    /// Neighbourhood bitset of `v`.
    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && bitset::test(self.row(u), v)
    }

    pub fn degree(&self, v: usize) -> usize {
        bitset::count(self.row(v))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).max()
    }

    pub fn average_degree(&self) -> f64 {
        if self.n == 0 {
            0.0
        } else {
            2.0 * self.edge_count as f64 / self.n as f64
        }
    }

    pub fn neighbours(&self, v: usize) -> VertexSet {
        VertexSet {
            n: self.n,
            bits: self.row(v).to_vec(),
        }
    }

    pub fn neighbour_list(&self, v: usize) -> Vec<usize> {
        bitset::ones(self.row(v)).collect()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            bitset::ones(self.row(u))
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn edge_set(&self) -> EdgeSet {
        EdgeSet(self.edges().collect())
    }

    pub fn complement(&self) -> Graph {
        let full = bitset::full(self.n);
        let mut adj = vec![0u64; self.adj.len()];
        for v in 0..self.n {
            let dst = &mut adj[v * self.words..(v + 1) * self.words];
            for (i, d) in dst.iter_mut().enumerate() {
                *d = !self.adj[v * self.words + i] & full[i];
            }
            bitset::clear(dst, v);
        }
        Graph {
            n: self.n,
            words: self.words,
            adj,
            edge_count: self.n * self.n.saturating_sub(1) / 2 - self.edge_count,
        }
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut b = GraphBuilder::from_graph(self);
        b.add_edge(u, v)?;
        Ok(b.build())
    }

    pub fn with_edges<I>(&self, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut b = GraphBuilder::from_graph(self);
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn without_edges<I>(&self, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut b = GraphBuilder::from_graph(self);
        for (u, v) in edges {
            b.remove_edge(u, v)?;
        }
        Ok(b.build())
    }

    /// Edge union of two graphs on the same vertex set.
    pub fn union(&self, other: &Graph) -> Result<Graph, GraphError> {
        if self.n != other.n {
            return Err(GraphError::SizeMismatch(self.n, other.n));
        }
        let adj = self.adj.iter().zip(&other.adj).map(|(a, b)| a | b).collect();
        Ok(Graph::from_rows(self.n, adj))
    }

    /// Edges of `self` not in `other`.
    pub fn difference(&self, other: &Graph) -> Result<Graph, GraphError> {
        if self.n != other.n {
            return Err(GraphError::SizeMismatch(self.n, other.n));
        }
        let adj = self.adj.iter().zip(&other.adj).map(|(a, b)| a & !b).collect();
        Ok(Graph::from_rows(self.n, adj))
    }

    pub fn is_edge_disjoint(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj.iter().zip(&other.adj).all(|(a, b)| a & b == 0)
    }

    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj.iter().zip(&other.adj).all(|(a, b)| a & !b == 0)
    }

    /// Subgraph induced on `vertices` (in ascending order), relabelled `0..k`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let k = vertices.len();
        let mut b = GraphBuilder::new(k).expect("induced subgraph fits");
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    b.add_edge(i, j).expect("in range");
                }
            }
        }
        b.build()
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut b = GraphBuilder::new(self.n).expect("same size");
        for (u, v) in self.edges() {
            b.add_edge(perm[u], perm[v]).expect("permutation in range");
        }
        b.build()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        components_of_rows(self.n, self.words, |v| self.row(v), false)
    }

    /// Components of the complement graph, computed without materialising it.
    pub fn co_components(&self) -> Vec<Vec<usize>> {
        components_of_rows(self.n, self.words, |v| self.row(v), true)
    }

    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }

    pub fn is_triangle_free(&self) -> bool {
        find_clique(self, 3).is_none()
    }

    pub(crate) fn check_invariants(&self) -> bool {
        let mut total = 0;
        for v in 0..self.n {
            let row = self.row(v);
            if bitset::test(row, v) {
                return false;
            }
            for u in bitset::ones(row) {
                if u >= self.n || !bitset::test(self.row(u), v) {
                    return false;
                }
            }
            total += bitset::count(row);
        }
        total == 2 * self.edge_count
    }
}

fn components_of_rows<'a, F>(n: usize, words: usize, row: F, complement: bool) -> Vec<Vec<usize>>
where
    F: Fn(usize) -> &'a [u64],
{
    let mut unvisited = bitset::full(n);
    let mut out = Vec::new();
    let mut frontier = Vec::new();
    let mut step = vec![0u64; words];
    while let Some(start) = bitset::first(&unvisited) {
        bitset::clear(&mut unvisited, start);
        let mut comp = vec![start];
        frontier.push(start);
        while let Some(v) = frontier.pop() {
            let r = row(v);
            for i in 0..words {
                step[i] = if complement {
                    unvisited[i] & !r[i]
                } else {
                    unvisited[i] & r[i]
                };
                unvisited[i] &= !step[i];
            }
            for u in bitset::ones(&step) {
                comp.push(u);
                frontier.push(u);
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Mutable staging area for a [`Graph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Result<GraphBuilder, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let words = bitset::words_for(n);
        Ok(GraphBuilder {
            n,
            words,
            adj: vec![0; n * words],
        })
    }

    pub fn from_graph(g: &Graph) -> GraphBuilder {
        GraphBuilder {
            n: g.n,
            words: g.words,
            adj: g.adj.clone(),
        }
    }

    fn check(&self, u: usize, v: usize) -> Result<(), GraphError> {
        for x in [u, v] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> Result<bool, GraphError> {
        self.check(u, v)?;
        Ok(bitset::test(&self.adj[u * self.words..(u + 1) * self.words], v))
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<&mut Self, GraphError> {
        self.check(u, v)?;
        let w = self.words;
        bitset::set(&mut self.adj[u * w..(u + 1) * w], v);
        bitset::set(&mut self.adj[v * w..(v + 1) * w], u);
        Ok(self)
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<&mut Self, GraphError> {
        self.check(u, v)?;
        let w = self.words;
        bitset::clear(&mut self.adj[u * w..(u + 1) * w], v);
        bitset::clear(&mut self.adj[v * w..(v + 1) * w], u);
        Ok(self)
    }

    pub fn build(self) -> Graph {
        Graph::from_rows(self.n, self.adj)
    }
}

/// Set of vertices of a host graph on `n` vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    bits: Vec<u64>,
}

impl VertexSet {
    pub fn new(n: usize) -> VertexSet {
        VertexSet {
            n,
            bits: vec![0; bitset::words_for(n)],
        }
    }

    pub fn full(n: usize) -> VertexSet {
        VertexSet {
            n,
            bits: bitset::full(n),
        }
    }

    pub fn from_vertices(n: usize, vertices: &[usize]) -> Result<VertexSet, GraphError> {
        let mut s = VertexSet::new(n);
        for &v in vertices {
            s.insert(v)?;
        }
        Ok(s)
    }

    pub fn insert(&mut self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        bitset::set(&mut self.bits, v);
        Ok(())
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && bitset::test(&self.bits, v)
    }

    pub fn len(&self) -> usize {
        bitset::count(&self.bits)
    }

    pub fn is_empty(&self) -> bool {
        bitset::is_empty(&self.bits)
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        bitset::ones(&self.bits)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            n: self.n,
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            n: self.n,
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a | b).collect(),
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Sorted, deduplicated list of unordered vertex pairs `(u, v)` with `u < v`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct EdgeSet(Vec<(usize, usize)>);

impl EdgeSet {
    pub fn new() -> EdgeSet {
        EdgeSet(Vec::new())
    }

    /// Normalises orientation, sorts and deduplicates. Loops are rejected.
    pub fn from_pairs<I>(pairs: I) -> Result<EdgeSet, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut v = Vec::new();
        for (a, b) in pairs {
            if a == b {
                return Err(GraphError::Loop(a));
            }
            v.push(if a < b { (a, b) } else { (b, a) });
        }
        v.sort_unstable();
        v.dedup();
        Ok(EdgeSet(v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[(usize, usize)] {
        &self.0
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        let e = if u < v { (u, v) } else { (v, u) };
        self.0.binary_search(&e).is_ok()
    }

    /// True when no vertex is covered twice.
    pub fn is_matching(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.0.iter().all(|&(u, v)| seen.insert(u) && seen.insert(v))
    }

    pub fn within_range(&self, n: usize) -> bool {
        self.0.iter().all(|&(_, v)| v < n)
    }

    pub fn to_graph(&self, n: usize) -> Result<Graph, GraphError> {
        Graph::from_edges(n, self.iter())
    }
}

impl FromIterator<(usize, usize)> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        EdgeSet::from_pairs(iter).expect("edge set without loops")
    }
}
