//! Graph strategies shared by the property tests.
#![allow(dead_code)]

use homcount::Graph;
use proptest::prelude::*;

/// Graph on `n` vertices whose upper-triangle adjacency is `bits`, row by row.
pub fn from_bits(n: usize, bits: &[bool]) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, pairs.zip(bits).filter(|(_, &b)| b).map(|(p, _)| p)).unwrap()
}

pub fn graph(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min..=max).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |b| from_bits(n, &b))
    })
}

/// Bipartite graph with sides of sizes `1..=side` each.
pub fn bipartite(side: usize) -> impl Strategy<Value = Graph> {
    (1..=side, 1..=side).prop_flat_map(|(a, b)| {
        prop::collection::vec(any::<bool>(), a * b).prop_map(move |bits| {
            let edges = (0..a).flat_map(|u| (0..b).map(move |v| (u, a + v)));
            Graph::from_edges(a + b, edges.zip(&bits).filter(|(_, &x)| x).map(|(p, _)| p)).unwrap()
        })
    })
}
