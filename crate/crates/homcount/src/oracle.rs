//! Reference implementations that share no code with the production counters,
//! plus seeded random fixtures.
//!
//! Everything here enumerates the whole search space and is only meant for
//! graphs with a handful of vertices.

use crate::graph::{Graph, VertexColoring};
use crate::partition::{partitions, SetPartition};
use num_bigint::{BigInt, BigUint};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn edge_ok(g: &Graph, a: usize, b: usize) -> bool {
    if a == b {
        g.has_loop(a)
    } else {
        g.has_edge(a, b)
    }
}

/// Calls `f` on every map `0..n → 0..m`.
fn for_each_map(n: usize, m: usize, mut f: impl FnMut(&[usize])) {
    if n > 0 && m == 0 {
        return;
    }
    let mut phi = vec![0usize; n];
    loop {
        f(&phi);
        let mut i = 0;
        while i < n {
            phi[i] += 1;
            if phi[i] < m {
                break;
            }
            phi[i] = 0;
            i += 1;
        }
        if i == n {
            return;
        }
    }
}

fn preserves(h: &Graph, g: &Graph, phi: &[usize]) -> bool {
    h.edges().all(|(u, v)| edge_ok(g, phi[u], phi[v])) && h.loops().all(|v| g.has_loop(phi[v]))
}

fn injective(phi: &[usize]) -> bool {
    let mut seen = phi.to_vec();
    seen.sort_unstable();
    seen.windows(2).all(|w| w[0] != w[1])
}

/// `#Hom(h, g)` over all `|V(g)|^|V(h)|` maps.
pub fn hom_count(h: &Graph, g: &Graph) -> BigUint {
    let mut n = 0u64;
    for_each_map(h.vertex_count(), g.vertex_count(), |phi| n += u64::from(preserves(h, g, phi)));
    BigUint::from(n)
}

pub fn emb_count(h: &Graph, g: &Graph) -> BigUint {
    let mut n = 0u64;
    for_each_map(h.vertex_count(), g.vertex_count(), |phi| n += u64::from(injective(phi) && preserves(h, g, phi)));
    BigUint::from(n)
}

pub fn strong_emb_count(h: &Graph, g: &Graph) -> BigUint {
    let k = h.vertex_count();
    let mut n = 0u64;
    for_each_map(k, g.vertex_count(), |phi| {
        let strong = (0..k).all(|u| (0..k).all(|v| u == v || h.has_edge(u, v) == g.has_edge(phi[u], phi[v])));
        n += u64::from(injective(phi) && strong && preserves(h, g, phi));
    });
    BigUint::from(n)
}

pub fn hom_exists(h: &Graph, g: &Graph) -> bool {
    let mut found = false;
    for_each_map(h.vertex_count(), g.vertex_count(), |phi| found |= !found && preserves(h, g, phi));
    found
}

/// Homs with `c(φ(v)) = v` for every pattern vertex.
pub fn cphom_count(h: &Graph, g: &Graph, coloring: &VertexColoring) -> BigUint {
    let classes = coloring.classes();
    let sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
    let mut n = 0u64;
    let mut choice = vec![0usize; h.vertex_count()];
    if sizes.contains(&0) {
        return BigUint::from(0u32);
    }
    loop {
        let phi: Vec<usize> = choice.iter().enumerate().map(|(v, &i)| classes[v][i]).collect();
        n += u64::from(preserves(h, g, &phi));
        let mut i = 0;
        while i < choice.len() {
            choice[i] += 1;
            if choice[i] < sizes[i] {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
        if i == choice.len() {
            return BigUint::from(n);
        }
    }
}

/// Subsets of `0..n` of size `k`, as sorted vectors.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
        .collect()
}

/// Steps `p` to the next permutation in lexicographic order; false after the last.
fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn degrees(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
    d.sort_unstable();
    d
}

/// Whether some bijection `a → b` preserves adjacency and loops, by trying all of them.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() || a.loop_count() != b.loop_count() {
        return false;
    }
    if degrees(a) != degrees(b) {
        return false;
    }
    let mut phi: Vec<usize> = (0..n).collect();
    loop {
        if preserves(a, b, &phi) {
            return true;
        }
        if !next_permutation(&mut phi) {
            return false;
        }
    }
}

/// Subgraphs of `g` (vertex subset plus edge subset) isomorphic to `h`.
pub fn sub_count(h: &Graph, g: &Graph) -> BigUint {
    let k = h.vertex_count();
    let e = h.edge_count();
    let mut n = 0u64;
    for verts in subsets(g.vertex_count(), k) {
        let inner: Vec<(usize, usize)> = g.edges().filter(|(u, v)| verts.contains(u) && verts.contains(v)).collect();
        assert!(inner.len() <= 20, "subgraph oracle limited to 20 inner edges");
        for pick in subsets(inner.len(), e) {
            let local = |x: usize| verts.iter().position(|&w| w == x).unwrap();
            let sub = Graph::from_edges(k, pick.iter().map(|&i| (local(inner[i].0), local(inner[i].1)))).unwrap();
            n += u64::from(isomorphic(&sub, h));
        }
    }
    BigUint::from(n)
}

pub fn induced_sub_count(h: &Graph, g: &Graph) -> BigUint {
    let mut n = 0u64;
    for verts in subsets(g.vertex_count(), h.vertex_count()) {
        n += u64::from(isomorphic(&crate::graph::induced_subgraph(g, &verts), h));
    }
    BigUint::from(n)
}

pub fn clique_count(g: &Graph, k: usize) -> u64 {
    subsets(g.vertex_count(), k)
        .iter()
        .filter(|s| s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| g.has_edge(u, v))))
        .count() as u64
}

/// Tries every 2-coloring.
pub fn is_bipartite(g: &Graph) -> bool {
    (0u64..1 << g.vertex_count()).any(|m| g.edges().all(|(u, v)| (m >> u & 1) != (m >> v & 1)))
}

/// `μ(⊥, ρ)` from `μ(σ, σ) = 1` and `Σ_{σ ≤ τ ≤ ρ} μ(σ, τ) = 0`, over the full lattice.
pub fn mobius_recursive(rho: &SetPartition) -> BigInt {
    let all = partitions(rho.ground_size());
    let bottom = SetPartition::singletons(rho.ground_size());
    let mut memo: HashMap<Vec<usize>, BigInt> = HashMap::new();
    fn go(
        t: &SetPartition,
        all: &[SetPartition],
        bottom: &SetPartition,
        memo: &mut HashMap<Vec<usize>, BigInt>,
    ) -> BigInt {
        let key = t.block_of();
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let v = if t == bottom {
            BigInt::from(1)
        } else {
            let below: Vec<&SetPartition> = all.iter().filter(|s| s.refines(t) && *s != t).collect();
            -below.into_iter().map(|s| go(s, all, bottom, memo)).sum::<BigInt>()
        };
        memo.insert(key, v.clone());
        v
    }
    go(rho, &all, &bottom, &mut memo)
}

/// `G(n, p)` without loops.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Random bipartite graph between sides of sizes `a` and `b`.
pub fn random_bipartite(rng: &mut impl Rng, a: usize, b: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            if rng.gen_bool(p) {
                edges.push((u, a + v));
            }
        }
    }
    Graph::from_edges(a + b, edges).unwrap()
}

/// Random connected bipartite graph on `n ≥ 2` vertices: a random spanning tree
/// plus random cross edges.
pub fn random_connected_bipartite(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    assert!(n >= 2);
    let mut side = vec![0usize; n];
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        side[v] = 1 - side[u];
        edges.push((u, v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if side[u] != side[v] && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn reference_values() {
        assert_eq!(hom_count(&complete(1), &petersen()), BigUint::from(10u32));
        assert_eq!(hom_count(&cycle(5), &cycle(7)), BigUint::from(0u32));
        assert_eq!(sub_count(&path(2), &complete(4)), BigUint::from(12u32));
        assert_eq!(clique_count(&complete(5), 3), 10);
        assert!(is_bipartite(&cycle(6)) && !is_bipartite(&cycle(5)));
        assert!(isomorphic(&cycle(5), &Graph::from_edges(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap()));
    }

    #[test]
    fn mobius_blocks() {
        let rho = SetPartition::from_blocks(4, vec![vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(mobius_recursive(&rho), BigInt::from(-6));
    }
}
