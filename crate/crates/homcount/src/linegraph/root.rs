//! Root reconstruction through Krausz clique partitions.

use super::{LineError, RootWitness};
use crate::graph::{bipartition, components, induced_subgraph, Graph};
use std::collections::HashSet;

/// A Krausz partition of a graph: cliques covering every edge exactly once, each
/// vertex in at most two of them. Single-vertex cliques are left implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KrauszPartition {
    pub cliques: Vec<Vec<usize>>,
}

impl KrauszPartition {
    pub fn validate(&self, l: &Graph) -> bool {
        let mut seen = HashSet::new();
        let mut member = vec![0usize; l.vertex_count()];
        for c in &self.cliques {
            for (i, &u) in c.iter().enumerate() {
                member[u] += 1;
                for &v in &c[i + 1..] {
                    if !l.has_edge(u, v) || !seen.insert((u.min(v), u.max(v))) {
                        return false;
                    }
                }
            }
        }
        member.iter().all(|&m| m <= 2) && seen.len() == l.edge_count()
    }
}

struct Krausz<'a> {
    g: &'a Graph,
    cliques: Vec<Vec<usize>>,
    member: Vec<Vec<usize>>,
    covered: HashSet<(usize, usize)>,
    open: Vec<usize>,
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

impl<'a> Krausz<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.vertex_count();
        Krausz {
            g,
            cliques: Vec::new(),
            member: vec![Vec::new(); n],
            covered: HashSet::new(),
            open: (0..n).map(|v| g.degree(v)).collect(),
        }
    }

    fn uncovered(&self, u: usize) -> Vec<usize> {
        self.g.neighbors(u).iter().copied().filter(|&w| !self.covered.contains(&key(u, w))).collect()
    }

    fn fits(&self, set: &[usize], w: usize) -> bool {
        self.member[w].len() < 2 && set.iter().all(|&x| self.g.has_edge(x, w) && !self.covered.contains(&key(x, w)))
    }

    fn push(&mut self, clique: Vec<usize>) {
        let id = self.cliques.len();
        for (i, &u) in clique.iter().enumerate() {
            self.member[u].push(id);
            for &v in &clique[i + 1..] {
                self.covered.insert(key(u, v));
                self.open[u] -= 1;
                self.open[v] -= 1;
            }
        }
        self.cliques.push(clique);
    }

    fn pop(&mut self) {
        let clique = self.cliques.pop().unwrap();
        for (i, &u) in clique.iter().enumerate() {
            self.member[u].pop();
            for &v in &clique[i + 1..] {
                self.covered.remove(&key(u, v));
                self.open[u] += 1;
                self.open[v] += 1;
            }
        }
    }

    fn solve(&mut self) -> bool {
        let n = self.g.vertex_count();
        let forced = (0..n).find(|&u| self.open[u] > 0 && !self.member[u].is_empty());
        let Some(u) = forced.or_else(|| (0..n).find(|&u| self.open[u] > 0)) else {
            return true;
        };
        if self.member[u].len() >= 2 {
            return false;
        }
        let rest = self.uncovered(u);
        if !self.member[u].is_empty() {
            let mut clique = vec![u];
            for &w in &rest {
                if !self.fits(&clique, w) {
                    return false;
                }
                clique.push(w);
            }
            self.push(clique);
            if self.solve() {
                return true;
            }
            self.pop();
            return false;
        }
        let mut a = vec![u, rest[0]];
        let mut b = vec![u];
        if self.member[rest[0]].len() >= 2 {
            return false;
        }
        self.split(&rest, 1, &mut a, &mut b)
    }

    /// Assigns `rest[i..]` to one of the two cliques through `u`.
    fn split(&mut self, rest: &[usize], i: usize, a: &mut Vec<usize>, b: &mut Vec<usize>) -> bool {
        if i == rest.len() {
            self.push(a.clone());
            if b.len() > 1 {
                self.push(b.clone());
            }
            if self.solve() {
                return true;
            }
            if b.len() > 1 {
                self.pop();
            }
            self.pop();
            return false;
        }
        let w = rest[i];
        if self.fits(a, w) {
            a.push(w);
            if self.split(rest, i + 1, a, b) {
                return true;
            }
            a.pop();
        }
        if self.fits(b, w) {
            b.push(w);
            if self.split(rest, i + 1, a, b) {
                return true;
            }
            b.pop();
        }
        false
    }
}

/// Some Krausz partition of `l`, or `None` if `l` is not a line graph.
pub fn krausz_partition(l: &Graph) -> Option<KrauszPartition> {
    let mut k = Krausz::new(l);
    k.solve().then_some(KrauszPartition { cliques: k.cliques })
}

fn is_triangle(c: &Graph) -> bool {
    c.vertex_count() == 3 && c.edge_count() == 3
}

/// Root edges, in local vertex order, for one connected component.
fn component_root(c: &Graph) -> Option<(usize, Vec<(usize, usize)>)> {
    if c.vertex_count() == 1 {
        return Some((2, vec![(0, 1)]));
    }
    if is_triangle(c) {
        return Some((4, vec![(0, 1), (0, 2), (0, 3)]));
    }
    let part = krausz_partition(c)?;
    let mut member = vec![Vec::new(); c.vertex_count()];
    for (id, clique) in part.cliques.iter().enumerate() {
        for &u in clique {
            member[u].push(id);
        }
    }
    let mut next = part.cliques.len();
    let edges = member
        .iter()
        .map(|m| match m.as_slice() {
            [a, b] => (*a.min(b), *a.max(b)),
            [a] => {
                next += 1;
                (*a, next - 1)
            }
            _ => unreachable!("connected component with an uncovered vertex"),
        })
        .collect();
    Some((next, edges))
}

pub fn root_graph(l: &Graph) -> Result<RootWitness, LineError> {
    if !l.is_simple() {
        return Err(LineError::Loops);
    }
    let mut edge_map = vec![(0, 0); l.vertex_count()];
    let mut offset = 0;
    for comp in components(l) {
        let c = induced_subgraph(l, &comp);
        let (n, edges) = component_root(&c).ok_or(LineError::NotALineGraph)?;
        for (&v, (a, b)) in comp.iter().zip(edges) {
            edge_map[v] = (a + offset, b + offset);
        }
        offset += n;
    }
    let root = Graph::from_edges(offset, edge_map.iter().copied()).expect("root edges in range");
    let witness = RootWitness { bipartition: bipartition(&root), root, edge_map };
    if !witness.verify(l) {
        return Err(LineError::NotALineGraph);
    }
    Ok(witness)
}
