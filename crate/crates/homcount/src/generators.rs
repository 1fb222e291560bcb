//! Kneser graphs, square grids and the bit-string encoding by paths.

use crate::graph::{canonical_form, components, Graph};
use crate::{par, Limits};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("Kneser graph needs r >= s >= 1, got r={r}, s={s}")]
    BadParams { r: usize, s: usize },
    #[error("Kneser ground set of size {0} exceeds 64")]
    GroundTooLarge(usize),
    #[error("{got} vertices exceed the vertex budget {limit}")]
    VertexBudget { got: u128, limit: usize },
    #[error("family index must be at least 3, got {0}")]
    FamilyIndex(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KneserParams {
    pub r: usize,
    pub s: usize,
    pub family_index: Option<usize>,
}

impl KneserParams {
    pub fn new(r: usize, s: usize) -> Self {
        KneserParams { r, s, family_index: None }
    }

    /// `K(n) = K((2n+1)(n-2), n(n-2))`.
    pub fn family(n: usize) -> Result<Self, GenError> {
        if n < 3 {
            return Err(GenError::FamilyIndex(n));
        }
        Ok(KneserParams { r: (2 * n + 1) * (n - 2), s: n * (n - 2), family_index: Some(n) })
    }

    pub fn vertex_count(&self) -> u128 {
        binomial(self.r, self.s)
    }

    pub fn degree(&self) -> u128 {
        if self.r < 2 * self.s {
            0
        } else {
            binomial(self.r - self.s, self.s)
        }
    }

    /// Colors used by the witness coloring, `r - 2s + 2`.
    pub fn witness_colors(&self) -> usize {
        (self.r + 2).saturating_sub(2 * self.s).max(1)
    }
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

#[derive(Clone, Debug)]
pub struct Kneser {
    pub params: KneserParams,
    pub graph: Graph,
    /// Sorted s-subsets of `0..r`, one per vertex, in lexicographic order.
    pub sets: Vec<Vec<usize>>,
    /// Proper coloring with `r - 2s + 2` colors: `min(min S, r - 2s + 1)`.
    pub coloring: Vec<usize>,
}

pub fn kneser(params: KneserParams) -> Result<Kneser, GenError> {
    kneser_with(params, &Limits::default())
}

pub fn kneser_with(params: KneserParams, limits: &Limits) -> Result<Kneser, GenError> {
    let KneserParams { r, s, .. } = params;
    if s == 0 || r < s {
        return Err(GenError::BadParams { r, s });
    }
    if r > 64 {
        return Err(GenError::GroundTooLarge(r));
    }
    let n = binomial(r, s);
    if n > limits.vertex_budget as u128 {
        return Err(GenError::VertexBudget { got: n, limit: limits.vertex_budget });
    }
    let table = BinomialTable::new(r);
    let mut sets = Vec::with_capacity(n as usize);
    for_each_combination(r, s, |c| sets.push(c.to_vec()));
    let adj = par::map(limits.exec, &sets, |set| {
        let mut mask = 0u64;
        for &e in set {
            mask |= 1 << e;
        }
        let rest: Vec<usize> = (0..r).filter(|&e| mask >> e & 1 == 0).collect();
        let mut out = Vec::with_capacity(table.get(rest.len(), s) as usize);
        for_each_combination(rest.len(), s, |c| {
            let other: Vec<usize> = c.iter().map(|&i| rest[i]).collect();
            out.push(table.rank(r, &other));
        });
        out
    });
    let top = r + 1 - 2 * s.min(r.div_ceil(2));
    let coloring = sets.iter().map(|set| set[0].min(top)).collect();
    let graph = Graph::from_parts(n as usize, adj, vec![false; n as usize]);
    Ok(Kneser { params, graph, sets, coloring })
}

struct BinomialTable {
    c: Vec<Vec<u64>>,
}

impl BinomialTable {
    fn new(r: usize) -> Self {
        let mut c = vec![vec![0u64; r + 1]; r + 1];
        for n in 0..=r {
            c[n][0] = 1;
            for k in 1..=n {
                c[n][k] = c[n - 1][k - 1] + if k < n { c[n - 1][k] } else { 0 };
            }
        }
        BinomialTable { c }
    }

    fn get(&self, n: usize, k: usize) -> u64 {
        if k > n {
            0
        } else {
            self.c[n][k]
        }
    }

    /// Lexicographic rank of a sorted k-subset of `0..r`.
    fn rank(&self, r: usize, set: &[usize]) -> usize {
        let k = set.len();
        let mut rank = 0u64;
        let mut start = 0;
        for (i, &a) in set.iter().enumerate() {
            for x in start..a {
                rank += self.get(r - 1 - x, k - 1 - i);
            }
            start = a + 1;
        }
        rank as usize
    }
}

/// Calls `f` on every sorted k-subset of `0..n`, lexicographically.
pub fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        f(&c);
        let mut i = k;
        while i > 0 && c[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        c[i - 1] += 1;
        for j in i..k {
            c[j] = c[j - 1] + 1;
        }
    }
}

#[derive(Clone, Debug)]
pub struct Grid {
    pub k: usize,
    pub graph: Graph,
    /// `labels[v] = (i, j)` with `v = i * k + j`.
    pub labels: Vec<(usize, usize)>,
}

pub fn grid(k: usize) -> Grid {
    assert!(k >= 1, "grid side must be positive");
    let mut edges = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if j + 1 < k {
                edges.push((i * k + j, i * k + j + 1));
            }
            if i + 1 < k {
                edges.push((i * k + j, (i + 1) * k + j));
            }
        }
    }
    let labels = (0..k * k).map(|v| (v / k, v % k)).collect();
    Grid { k, graph: Graph::from_edges(k * k, edges).unwrap(), labels }
}

/// Paths `P_i` (i edges) for every set bit `x_i` (1-indexed), in increasing
/// order, followed by `|x|` isolated vertices.
pub fn encode_string(x: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut next = 0;
    for (i, _) in x.iter().enumerate().filter(|(_, &b)| b) {
        let len = i + 1;
        for t in 0..len {
            edges.push((next + t, next + t + 1));
        }
        next += len + 1;
    }
    Graph::from_edges(next + x.len(), edges).unwrap()
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DecodeFailure {
    #[error("graph has no vertices")]
    Empty,
    #[error("component containing vertex {0} is not a path")]
    NonPathComponent(usize),
    #[error("path with {0} edges occurs more than once")]
    DuplicatePath(usize),
    #[error("path with {len} edges exceeds the {isolated} isolated vertices")]
    PathTooLong { len: usize, isolated: usize },
}

pub fn decode_string(g: &Graph) -> Result<Vec<bool>, DecodeFailure> {
    if g.vertex_count() == 0 {
        return Err(DecodeFailure::Empty);
    }
    let mut isolated = 0;
    let mut lengths = Vec::new();
    for comp in components(g) {
        if comp.iter().any(|&v| g.has_loop(v) || g.degree(v) > 2) {
            return Err(DecodeFailure::NonPathComponent(comp[0]));
        }
        if comp.len() == 1 {
            isolated += 1;
            continue;
        }
        let edges: usize = comp.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
        if edges + 1 != comp.len() {
            return Err(DecodeFailure::NonPathComponent(comp[0]));
        }
        lengths.push(edges);
    }
    let mut x = vec![false; isolated];
    for len in lengths {
        if len > isolated {
            return Err(DecodeFailure::PathTooLong { len, isolated });
        }
        if x[len - 1] {
            return Err(DecodeFailure::DuplicatePath(len));
        }
        x[len - 1] = true;
    }
    Ok(x)
}

pub fn bits_from_str(s: &str) -> Option<Vec<bool>> {
    s.chars()
        .map(|c| match c {
            '0' => Some(false),
            '1' => Some(true),
            _ => None,
        })
        .collect()
}

pub fn bits_to_string(x: &[bool]) -> String {
    x.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

/// Every simple graph on `n` vertices up to isomorphism, ordered by edge count
/// and then canonical form. Results are cached per `n`.
pub fn all_graphs(n: usize) -> &'static [Graph] {
    const MAX: usize = 8;
    static CACHE: [OnceLock<Vec<Graph>>; MAX + 1] = [const { OnceLock::new() }; MAX + 1];
    assert!(n <= MAX, "graph enumeration supports at most {MAX} vertices");
    CACHE[n].get_or_init(|| {
        if n == 0 {
            return vec![Graph::empty(0)];
        }
        let mut seen = BTreeMap::new();
        for base in all_graphs(n - 1) {
            for mask in 0u32..1 << (n - 1) {
                let extra = (0..n - 1).filter(|&u| mask >> u & 1 == 1).map(|u| (u, n - 1));
                let edges = base.edges().chain(extra);
                let g = Graph::from_edges(n, edges).unwrap();
                let form = canonical_form(&g);
                seen.entry((g.edge_count(), form)).or_insert(g);
            }
        }
        seen.into_values().collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_connected, is_isomorphic, named};

    #[test]
    fn petersen_and_small_family() {
        let p = kneser(KneserParams::new(5, 2)).unwrap();
        assert_eq!(p.graph.vertex_count(), 10);
        assert_eq!(p.graph.edge_count(), 15);
        assert!(is_isomorphic(&p.graph, &named::petersen()));
        let k3 = kneser(KneserParams::family(3).unwrap()).unwrap();
        assert_eq!(k3.graph.vertex_count(), 35);
        assert!(is_connected(&k3.graph));
        assert_eq!(k3.params.witness_colors(), 3);
    }

    #[test]
    fn witness_is_proper_with_expected_colors() {
        for (r, s) in [(5, 2), (7, 3), (6, 2), (9, 4), (4, 2)] {
            let k = kneser(KneserParams::new(r, s)).unwrap();
            for (u, v) in k.graph.edges() {
                assert_ne!(k.coloring[u], k.coloring[v]);
            }
            let used: std::collections::BTreeSet<_> = k.coloring.iter().collect();
            assert_eq!(used.len(), k.params.witness_colors(), "K({r},{s})");
        }
    }

    #[test]
    fn single_element_sets_give_cliques() {
        for r in 1..=6 {
            assert_eq!(kneser(KneserParams::new(r, 1)).unwrap().graph, named::complete(r));
        }
    }

    #[test]
    fn budget_guard() {
        let limits = Limits { vertex_budget: 100, ..Limits::default() };
        assert!(matches!(kneser_with(KneserParams::family(4).unwrap(), &limits), Err(GenError::VertexBudget { .. })));
    }

    #[test]
    fn graph_counts_up_to_isomorphism() {
        let counts: Vec<usize> = (0..=6).map(|n| all_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn grids() {
        assert_eq!(grid(1).graph, named::complete(1));
        assert!(is_isomorphic(&grid(2).graph, &named::cycle(4)));
        assert_eq!(grid(3).graph.edge_count(), 12);
    }

    #[test]
    fn encoding() {
        let g = encode_string(&bits_from_str("101").unwrap());
        assert_eq!((g.vertex_count(), g.edge_count()), (9, 4));
        assert_eq!(encode_string(&[false; 3]).edge_count(), 0);
        let x = bits_from_str("10110").unwrap();
        assert_eq!(decode_string(&encode_string(&x)).unwrap(), x);
        assert_eq!(decode_string(&Graph::empty(3)).unwrap(), vec![false; 3]);
        let two = crate::graph::disjoint_union(&[&named::path(2), &named::path(2), &Graph::empty(3)]).graph;
        assert_eq!(decode_string(&two), Err(DecodeFailure::DuplicatePath(2)));
        assert_eq!(decode_string(&named::complete(3)), Err(DecodeFailure::NonPathComponent(0)));
        assert!(matches!(decode_string(&named::path(3)), Err(DecodeFailure::PathTooLong { .. })));
    }
}
