//! Structural probes: connectivity, bipartiteness, odd girth, chromatic number, cores.

use super::{induced_subgraph, Graph, GraphError};
use std::collections::VecDeque;

pub const CHROMATIC_EXACT_LIMIT: usize = 20;

/// Connected components, each sorted, ordered by smallest vertex.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            i += 1;
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    components(g).len() <= 1
}

/// A proper 2-coloring, or `None` when an odd cycle exists. Loops are ignored.
pub fn bipartition(g: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut side = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        if side[s] != usize::MAX {
            continue;
        }
        side[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if side[w] == usize::MAX {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if side[w] == side[v] {
                    return None;
                }
            }
        }
    }
    Some(side)
}

struct Layers {
    dist: Vec<usize>,
    parent: Vec<usize>,
}

fn bfs(g: &Graph, source: usize) -> Layers {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    Layers { dist, parent }
}

/// Shortest odd closed walk through `source` found by BFS layering: the least
/// `2d + 1` over edges joining two vertices at distance `d`. With the returned edge.
fn odd_through(g: &Graph, source: usize) -> Option<(usize, (usize, usize), Layers)> {
    let layers = bfs(g, source);
    let mut best: Option<(usize, (usize, usize))> = None;
    for (u, v) in g.edges() {
        let d = layers.dist[u];
        if d != usize::MAX && d == layers.dist[v] && best.is_none_or(|(b, _)| 2 * d + 1 < b) {
            best = Some((2 * d + 1, (u, v)));
        }
    }
    best.map(|(len, e)| (len, e, layers))
}

/// Odd girth from a single source. Equals the odd girth when the graph is
/// vertex-transitive; an upper bound otherwise.
pub fn odd_girth_from(g: &Graph, source: usize) -> Option<usize> {
    odd_through(g, source).map(|(len, _, _)| len)
}

/// Length of a shortest odd cycle, `None` for bipartite graphs. Loops are ignored.
pub fn odd_girth(g: &Graph) -> Option<usize> {
    shortest_odd_cycle(g).map(|c| c.len())
}

/// A shortest odd cycle as a vertex sequence.
pub fn shortest_odd_cycle(g: &Graph) -> Option<Vec<usize>> {
    let mut best: Option<(usize, usize, (usize, usize), Layers)> = None;
    for comp in components(g) {
        if bipartition(&induced_subgraph(g, &comp)).is_some() {
            continue;
        }
        for &s in &comp {
            if let Some((len, e, layers)) = odd_through(g, s) {
                if best.as_ref().is_none_or(|b| len < b.0) {
                    best = Some((len, s, e, layers));
                }
            }
        }
    }
    let (_, s, (u, v), layers) = best?;
    let climb = |mut x: usize| {
        let mut p = vec![x];
        while x != s {
            x = layers.parent[x];
            p.push(x);
        }
        p
    };
    let mut cycle = climb(u);
    cycle.reverse();
    let back = climb(v);
    cycle.extend(&back[..back.len() - 1]);
    Some(cycle)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChromaticResult {
    pub value: usize,
    pub coloring: Vec<usize>,
    /// False when `value` is only a validated upper bound.
    pub exact: bool,
}

/// Exact chromatic number up to [`CHROMATIC_EXACT_LIMIT`] vertices. Above it, a
/// supplied coloring is validated and returned as an upper bound, flagged exact
/// when it meets a cheap lower bound (edge, odd cycle). Loops are ignored.
pub fn chromatic_number(g: &Graph, hint: Option<&[usize]>) -> Result<ChromaticResult, GraphError> {
    chromatic_number_with(g, hint, CHROMATIC_EXACT_LIMIT)
}

pub fn chromatic_number_with(
    g: &Graph,
    hint: Option<&[usize]>,
    threshold: usize,
) -> Result<ChromaticResult, GraphError> {
    let n = g.vertex_count();
    if let Some(c) = hint {
        validate_coloring(g, c)?;
    }
    if n <= threshold {
        let lower = if n == 0 { 0 } else { 1 };
        for k in lower..=n {
            if let Some(coloring) = k_coloring(g, k) {
                return Ok(ChromaticResult { value: k, coloring, exact: true });
            }
        }
        unreachable!("n colors always suffice");
    }
    let c = hint.ok_or(GraphError::ExactnessUnavailable { threshold })?;
    let mut used: Vec<usize> = c.to_vec();
    used.sort_unstable();
    used.dedup();
    let value = used.len();
    let cheap_lower = if g.edge_count() == 0 {
        usize::from(n > 0)
    } else if bipartition(g).is_some() {
        2
    } else {
        3
    };
    Ok(ChromaticResult { value, coloring: c.to_vec(), exact: value <= cheap_lower })
}

pub(crate) fn validate_coloring(g: &Graph, c: &[usize]) -> Result<(), GraphError> {
    if c.len() != g.vertex_count() {
        return Err(GraphError::ColoringSize { expected: g.vertex_count(), got: c.len() });
    }
    for (u, v) in g.edges() {
        if c[u] == c[v] {
            return Err(GraphError::ImproperColoring(u, v));
        }
    }
    Ok(())
}

/// DSATUR-ordered backtracking for a proper `k`-coloring.
pub(crate) fn k_coloring(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut color = vec![usize::MAX; n];
    fn go(g: &Graph, k: usize, color: &mut Vec<usize>, done: usize, used: usize) -> bool {
        let n = g.vertex_count();
        if done == n {
            return true;
        }
        let mut pick = usize::MAX;
        let mut pick_key = (0usize, 0usize);
        let mut pick_mask = 0u64;
        for v in 0..n {
            if color[v] != usize::MAX {
                continue;
            }
            let mut mask = 0u64;
            for &w in g.neighbors(v) {
                if color[w] != usize::MAX {
                    mask |= 1 << color[w];
                }
            }
            let key = (mask.count_ones() as usize, g.degree(v));
            if pick == usize::MAX || key > pick_key {
                pick = v;
                pick_key = key;
                pick_mask = mask;
            }
        }
        for c in 0..k.min(used + 1) {
            if pick_mask >> c & 1 == 0 {
                color[pick] = c;
                if go(g, k, color, done + 1, used.max(c + 1)) {
                    return true;
                }
            }
        }
        color[pick] = usize::MAX;
        false
    }
    assert!(k <= 64, "k-coloring search supports at most 64 colors");
    go(g, k, &mut color, 0, 0).then_some(color)
}

/// True iff every endomorphism is bijective, i.e. no homomorphism into `h − v` for any `v`.
pub fn is_core(h: &Graph) -> bool {
    let n = h.vertex_count();
    (0..n).all(|v| {
        let keep: Vec<usize> = (0..n).filter(|&w| w != v).collect();
        !crate::counting::exists_hom(h, &induced_subgraph(h, &keep))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn odd_girth_basics() {
        assert_eq!(odd_girth(&petersen()), Some(5));
        assert_eq!(odd_girth(&cycle(8)), None);
        assert_eq!(odd_girth(&cycle(7)), Some(7));
        assert_eq!(odd_girth(&complete(4)), Some(3));
        assert_eq!(odd_girth_from(&petersen(), 3), Some(5));
    }

    #[test]
    fn odd_cycle_is_a_cycle() {
        let g = grotzsch();
        let c = shortest_odd_cycle(&g).unwrap();
        assert_eq!(c.len(), 5);
        for i in 0..c.len() {
            assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
        }
        let mut s = c.clone();
        s.sort_unstable();
        s.dedup();
        assert_eq!(s.len(), c.len());
    }

    #[test]
    fn chromatic_basics() {
        assert_eq!(chromatic_number(&complete(4), None).unwrap().value, 4);
        assert_eq!(chromatic_number(&cycle(5), None).unwrap().value, 3);
        assert_eq!(chromatic_number(&grotzsch(), None).unwrap().value, 4);
        assert_eq!(chromatic_number(&Graph::empty(0), None).unwrap().value, 0);
        let big = cycle(25);
        assert!(chromatic_number(&big, None).is_err());
        let hint: Vec<usize> = (0..25).map(|i| if i == 24 { 2 } else { i % 2 }).collect();
        let r = chromatic_number(&big, Some(&hint)).unwrap();
        assert_eq!((r.value, r.exact), (3, true));
    }

    #[test]
    fn cores() {
        assert!(is_core(&complete(3)));
        assert!(!is_core(&path(2)));
        assert!(is_core(&complete(1)));
        assert!(is_core(&cycle(5)));
        assert!(!is_core(&cycle(6)));
    }
}
