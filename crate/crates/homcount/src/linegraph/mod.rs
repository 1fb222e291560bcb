//! Line graphs and their roots, hom decision into line graphs, and the quantum
//! graph that turns hom counts into a line graph into hom counts into the root.

mod pattern;
mod root;

pub use pattern::{line_pattern_quantum, LINE_PATTERN_VERTEX_LIMIT};
pub use root::{krausz_partition, root_graph, KrauszPartition};

use crate::counting::search::Search;
use crate::graph::{components, induced_subgraph, Graph};
use crate::par::{self, Exec};
use std::collections::VecDeque;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LineError {
    #[error("graph is not a line graph")]
    NotALineGraph,
    #[error("line graph operations need a loop-free graph")]
    Loops,
}

#[derive(Clone, Debug)]
pub struct LineGraph {
    pub graph: Graph,
    /// `edges[v]` is the root edge behind vertex `v`.
    pub edges: Vec<(usize, usize)>,
}

/// One vertex per edge of `g` (in [`Graph::edges`] order), adjacent when the
/// edges share exactly one endpoint.
pub fn line_graph(g: &Graph) -> LineGraph {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut at = vec![Vec::new(); g.vertex_count()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        at[u].push(i);
        at[v].push(i);
    }
    let mut adj = vec![Vec::new(); edges.len()];
    for list in &at {
        for (x, &i) in list.iter().enumerate() {
            for &j in &list[x + 1..] {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    LineGraph { graph: Graph::from_parts(edges.len(), adj, vec![false; edges.len()]), edges }
}

#[derive(Clone, Debug)]
pub struct RootWitness {
    /// Root without isolated vertices.
    pub root: Graph,
    /// `edge_map[v]` is the root edge of line-graph vertex `v`.
    pub edge_map: Vec<(usize, usize)>,
    /// A proper 2-coloring of the root when it is bipartite.
    pub bipartition: Option<Vec<usize>>,
}

impl RootWitness {
    pub fn is_bipartite(&self) -> bool {
        self.bipartition.is_some()
    }

    /// Checks that `edge_map` is a bijection onto the root edges under which
    /// adjacency in `l` is exactly edge intersection.
    pub fn verify(&self, l: &Graph) -> bool {
        let n = l.vertex_count();
        if self.edge_map.len() != n || self.root.edge_count() != n {
            return false;
        }
        if (0..self.root.vertex_count()).any(|v| self.root.degree(v) == 0) {
            return false;
        }
        let meets = |a: (usize, usize), b: (usize, usize)| a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1;
        (0..n).all(|u| {
            self.root.has_edge(self.edge_map[u].0, self.edge_map[u].1)
                && (u + 1..n).all(|v| meets(self.edge_map[u], self.edge_map[v]) == l.has_edge(u, v))
        })
    }
}

/// Whether `h` has a homomorphism into the line graph `l`.
///
/// Per component of `h` on `k` vertices: a root vertex of degree `d >= k` gives a
/// clique on `d` vertices in `l`, which receives every `k`-vertex graph. Otherwise
/// `l` has maximum degree below `2k` and the image lies within distance `k - 1` of
/// the image of any one vertex, so a pinned search in that ball decides.
pub fn decide_hom_to_line(h: &Graph, l: &Graph) -> Result<bool, LineError> {
    decide_hom_to_line_with(h, l, Exec::default())
}

pub fn decide_hom_to_line_with(h: &Graph, l: &Graph, exec: Exec) -> Result<bool, LineError> {
    let witness = root_graph(l)?;
    if !h.is_simple() {
        return Ok(false);
    }
    let d = witness.root.max_degree();
    for comp in components(h) {
        let k = comp.len();
        if d >= k {
            continue;
        }
        let hi = induced_subgraph(h, &comp);
        let anchors: Vec<usize> = (0..l.vertex_count()).collect();
        let found = par::map(exec, &anchors, |&a| pinned_search(&hi, l, a, k - 1)).into_iter().any(|x| x);
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

fn ball(l: &Graph, center: usize, radius: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; l.vertex_count()];
    dist[center] = 0;
    let mut queue = VecDeque::from([center]);
    let mut out = vec![center];
    while let Some(v) = queue.pop_front() {
        if dist[v] == radius {
            continue;
        }
        for &w in l.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                out.push(w);
                queue.push_back(w);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Hom from connected `h` into the `radius`-ball around `anchor`, with vertex 0 of `h`
/// sent to `anchor`.
fn pinned_search(h: &Graph, l: &Graph, anchor: usize, radius: usize) -> bool {
    let keep = ball(l, anchor, radius);
    let local = induced_subgraph(l, &keep);
    let a = keep.binary_search(&anchor).unwrap();
    let all: Vec<usize> = (0..keep.len()).collect();
    let lists = (0..h.vertex_count()).map(|v| if v == 0 { vec![a] } else { all.clone() }).collect();
    Search::new(h, &local).restrict(lists).find().is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::exists_hom;
    use crate::graph::{is_isomorphic, named::*};

    #[test]
    fn small_line_graphs() {
        assert!(is_isomorphic(&line_graph(&star(3)).graph, &complete(3)));
        assert!(is_isomorphic(&line_graph(&cycle(8)).graph, &cycle(8)));
        assert!(is_isomorphic(&line_graph(&path(2)).graph, &path(1)));
    }

    #[test]
    fn triangle_root_is_a_claw() {
        let w = root_graph(&complete(3)).unwrap();
        assert!(is_isomorphic(&w.root, &star(3)));
        assert!(w.is_bipartite());
    }

    #[test]
    fn petersen_is_not_a_line_graph() {
        assert_eq!(root_graph(&petersen()).unwrap_err(), LineError::NotALineGraph);
        assert_eq!(root_graph(&star(3)).unwrap_err(), LineError::NotALineGraph);
    }

    #[test]
    fn whitney_roundtrip_on_named_graphs() {
        for g in [complete(4), complete_bipartite(3, 3), petersen(), path(5), cycle(5), star(4)] {
            let w = root_graph(&line_graph(&g).graph).unwrap();
            assert!(is_isomorphic(&w.root, &g));
        }
    }

    #[test]
    fn krausz_output_is_valid() {
        let l = line_graph(&complete(5)).graph;
        assert!(krausz_partition(&l).unwrap().validate(&l));
    }

    #[test]
    fn isolated_and_disconnected() {
        let l = Graph::from_edges(3, [(0, 1)]).unwrap();
        let w = root_graph(&l).unwrap();
        assert_eq!((w.root.vertex_count(), w.root.edge_count()), (5, 3));
    }

    #[test]
    fn decision_examples() {
        let k5 = line_graph(&star(5)).graph;
        assert!(decide_hom_to_line(&complete(3), &k5).unwrap());
        assert!(!decide_hom_to_line(&cycle(5), &cycle(8)).unwrap());
        assert!(decide_hom_to_line(&complete(1), &path(1)).unwrap());
        let l = line_graph(&cycle(6)).graph;
        assert_eq!(decide_hom_to_line(&cycle(3), &l).unwrap(), exists_hom(&cycle(3), &l));
    }
}
