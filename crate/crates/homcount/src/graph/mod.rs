//! Simple undirected graphs with optional self-loops, plus colorings.
//!
//! Vertices are dense indices `0..n`. A graph is immutable once built.

mod canon;
pub mod io;
mod ops;
pub(crate) mod probe;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use ops::{disjoint_union, induced_subgraph, quotient, tensor_product, DisjointUnion};
pub use probe::{
    bipartition, chromatic_number, components, is_connected, is_core, odd_girth, odd_girth_from, shortest_odd_cycle,
    ChromaticResult,
};

use std::fmt;
use thiserror::Error;

const DENSE_LIMIT: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("partition ground size {got} does not match vertex count {expected}")]
    PartitionSize { expected: usize, got: usize },
    #[error("quotient is not a spasm: block contains adjacent vertices {0} and {1}")]
    SelfLoopRejection(usize, usize),
    #[error("coloring is not a homomorphism: edge {{{0},{1}}} maps to a non-edge")]
    NotAHomomorphism(usize, usize),
    #[error("coloring has {got} entries, target has {expected} vertices")]
    ColoringSize { expected: usize, got: usize },
    #[error("exact chromatic number unavailable above {threshold} vertices without a witness")]
    ExactnessUnavailable { threshold: usize },
    #[error("supplied coloring is not proper at edge {{{0},{1}}}")]
    ImproperColoring(usize, usize),
}

#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    loops: Vec<bool>,
    edge_count: usize,
    dense: Option<Vec<u64>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self::from_edges(n, std::iter::empty()).expect("no edges")
    }

    /// Builds a graph from an edge list. `(v, v)` is a loop; duplicates are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut loops = vec![false; n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                loops[u] = true;
            } else {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        Ok(Self::from_parts(n, adj, loops))
    }

    pub(crate) fn from_parts(n: usize, mut adj: Vec<Vec<usize>>, loops: Vec<bool>) -> Self {
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let dense = (n <= DENSE_LIMIT).then(|| {
            let words = n.div_ceil(64);
            let mut bits = vec![0u64; n * words];
            for (u, list) in adj.iter().enumerate() {
                for &v in list {
                    bits[u * words + v / 64] |= 1 << (v % 64);
                }
                if loops[u] {
                    bits[u * words + u / 64] |= 1 << (u % 64);
                }
            }
            bits
        });
        Graph { n, adj, loops, edge_count, dense }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of non-loop edges.
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn loop_count(&self) -> usize {
        self.loops.iter().filter(|&&l| l).count()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.loops[v]
    }

    pub fn is_simple(&self) -> bool {
        !self.loops.iter().any(|&l| l)
    }

    /// Adjacency test; `has_edge(v, v)` reports the loop flag.
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if let Some(bits) = &self.dense {
            let words = self.n.div_ceil(64);
            return bits[u * words + v / 64] >> (v % 64) & 1 == 1;
        }
        if u == v {
            return self.loops[u];
        }
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Non-loop edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn loops(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(|&v| self.loops[v])
    }

    pub fn without_loops(&self) -> Graph {
        Graph::from_parts(self.n, self.adj.clone(), vec![false; self.n])
    }

    pub fn with_all_loops(&self) -> Graph {
        Graph::from_parts(self.n, self.adj.clone(), vec![true; self.n])
    }

    /// Same graph with every vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![Vec::new(); self.n];
        let mut loops = vec![false; self.n];
        for v in 0..self.n {
            adj[perm[v]] = self.adj[v].iter().map(|&w| perm[w]).collect();
            loops[perm[v]] = self.loops[v];
        }
        Graph::from_parts(self.n, adj, loops)
    }

    /// Adds the given edges to a copy of this graph.
    pub fn with_edges<I>(&self, extra: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let base = self.edges().chain(self.loops().map(|v| (v, v)));
        Graph::from_edges(self.n, base.chain(extra))
    }

    pub fn complement_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj && self.loops == other.loops
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "]")?;
        if self.loops.iter().any(|&l| l) {
            write!(f, ", loops={:?}", self.loops().collect::<Vec<_>>())?;
        }
        write!(f, ")")
    }
}

/// A homomorphism from `target` into `pattern`, stored as a vertex map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexColoring {
    target: Graph,
    pattern: Graph,
    assignment: Vec<usize>,
}

impl VertexColoring {
    pub fn new(target: Graph, pattern: Graph, assignment: Vec<usize>) -> Result<Self, GraphError> {
        check_homomorphism(&target, &pattern, &assignment)?;
        Ok(VertexColoring { target, pattern, assignment })
    }

    pub fn target(&self) -> &Graph {
        &self.target
    }

    pub fn pattern(&self) -> &Graph {
        &self.pattern
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn color(&self, v: usize) -> usize {
        self.assignment[v]
    }

    /// Target vertices of each color class.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.pattern.vertex_count()];
        for (v, &c) in self.assignment.iter().enumerate() {
            out[c].push(v);
        }
        out
    }
}

/// Checks that `map` sends every edge (and loop) of `from` onto an edge or loop of `to`.
pub fn check_homomorphism(from: &Graph, to: &Graph, map: &[usize]) -> Result<(), GraphError> {
    if map.len() != from.vertex_count() {
        return Err(GraphError::ColoringSize { expected: from.vertex_count(), got: map.len() });
    }
    for &c in map {
        if c >= to.vertex_count() {
            return Err(GraphError::VertexOutOfRange { vertex: c, n: to.vertex_count() });
        }
    }
    for (u, v) in from.edges() {
        if !to.has_edge(map[u], map[v]) {
            return Err(GraphError::NotAHomomorphism(u, v));
        }
    }
    for v in from.loops() {
        if !to.has_loop(map[v]) {
            return Err(GraphError::NotAHomomorphism(v, v));
        }
    }
    Ok(())
}

pub fn is_homomorphism(from: &Graph, to: &Graph, map: &[usize]) -> bool {
    check_homomorphism(from, to, map).is_ok()
}

/// Common small graphs.
pub mod named {
    use super::Graph;

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).unwrap()
    }

    /// Path with `len` edges.
    pub fn path(len: usize) -> Graph {
        Graph::from_edges(len + 1, (0..len).map(|i| (i, i + 1))).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges = (0..a).flat_map(|u| (0..b).map(move |v| (u, a + v)));
        Graph::from_edges(a + b, edges).unwrap()
    }

    pub fn looped_point() -> Graph {
        Graph::from_edges(1, [(0, 0)]).unwrap()
    }

    /// Mycielskian of the 5-cycle: triangle-free, 4-chromatic, 11 vertices.
    pub fn grotzsch() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, 5 + (i + 1) % 5));
            edges.push((i, 5 + (i + 4) % 5));
            edges.push((5 + i, 10));
        }
        Graph::from_edges(11, edges).unwrap()
    }

    /// Triangle-free, 4-regular and 4-chromatic on 12 vertices.
    pub fn chvatal() -> Graph {
        let adj: [&[usize]; 10] = [
            &[1, 4, 6, 9],
            &[2, 5, 7],
            &[3, 6, 8],
            &[4, 7, 9],
            &[5, 8],
            &[10, 11],
            &[10, 11],
            &[8, 11],
            &[10],
            &[10, 11],
        ];
        let edges = adj.iter().enumerate().flat_map(|(u, l)| l.iter().map(move |&v| (u, v)));
        Graph::from_edges(12, edges).unwrap()
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, edges).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dense_and_sparse_adjacency_agree() {
        let g = named::cycle(5);
        assert!(g.has_edge(0, 1) && g.has_edge(4, 0) && !g.has_edge(0, 2));
        assert_eq!(g.edge_count(), 5);
        let looped = g.with_all_loops();
        assert!(looped.has_edge(3, 3));
        assert_eq!(looped.without_loops(), g);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(Graph::from_edges(2, [(0, 2)]).is_err());
    }

    #[test]
    fn grotzsch_shape() {
        let g = named::grotzsch();
        assert_eq!(g.vertex_count(), 11);
        assert_eq!(g.edge_count(), 20);
    }

    #[test]
    fn coloring_must_be_homomorphism() {
        let c5 = named::cycle(5);
        let k2 = named::complete(2);
        assert!(VertexColoring::new(c5.clone(), k2, vec![0, 1, 0, 1, 0]).is_err());
        let k3 = named::complete(3);
        assert!(VertexColoring::new(c5, k3, vec![0, 1, 0, 1, 2]).is_ok());
    }
}
