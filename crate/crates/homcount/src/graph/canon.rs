//! Canonical forms.
//!
//! The form of a graph is the lexicographically largest column-major upper-triangle
//! adjacency string (diagonal = loop flag) over a canonical set of vertex orderings.
//! Up to [`EXHAUSTIVE_LIMIT`] vertices that set is every permutation; above it the
//! orderings are the leaves of an individualization-refinement tree.

use super::Graph;
use std::cmp::Ordering;

pub const EXHAUSTIVE_LIMIT: usize = 8;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn vertex_count(&self) -> usize {
        u32::from_le_bytes(self.0[..4].try_into().unwrap()) as usize
    }

    /// The graph in canonical vertex order.
    pub fn to_graph(&self) -> Graph {
        let n = self.vertex_count();
        let bits = &self.0[4..];
        let mut edges = Vec::new();
        let mut t = 0;
        for j in 0..n {
            for i in 0..=j {
                if bits[t / 8] >> (7 - t % 8) & 1 == 1 {
                    edges.push((i, j));
                }
                t += 1;
            }
        }
        Graph::from_edges(n, edges).unwrap()
    }
}

impl std::fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CanonicalForm(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && a.loop_count() == b.loop_count()
        && sorted_degrees(a) == sorted_degrees(b)
        && canonical_form(a) == canonical_form(b)
}

fn sorted_degrees(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
    d.sort_unstable();
    d
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.vertex_count();
    let order = if n <= EXHAUSTIVE_LIMIT { exhaustive(g) } else { IrSearch::run(g) };
    let mut bytes = (n as u32).to_le_bytes().to_vec();
    bytes.extend(pack(&adjacency_string(g, &order)));
    CanonicalForm(bytes)
}

/// Column-major upper triangle including the diagonal, for the ordering `order[pos] = vertex`.
fn adjacency_string(g: &Graph, order: &[usize]) -> Vec<bool> {
    let mut out = Vec::with_capacity(order.len() * (order.len() + 1) / 2);
    for j in 0..order.len() {
        for i in 0..=j {
            out.push(g.has_edge(order[i], order[j]));
        }
    }
    out
}

fn pack(bits: &[bool]) -> Vec<u8> {
    bits.chunks(8).map(|c| c.iter().enumerate().fold(0u8, |acc, (i, &b)| acc | ((b as u8) << (7 - i)))).collect()
}

fn column<'a>(g: &'a Graph, order: &'a [usize], v: usize) -> impl Iterator<Item = bool> + 'a {
    order.iter().map(move |&u| g.has_edge(u, v)).chain(std::iter::once(g.has_loop(v)))
}

fn exhaustive(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut best: Option<(Vec<bool>, Vec<usize>)> = None;
    let mut order = Vec::with_capacity(n);
    let mut used = vec![false; n];
    let mut bits = Vec::new();
    // `tight` = current prefix equals the best string's prefix.
    fn go(
        g: &Graph,
        order: &mut Vec<usize>,
        used: &mut [bool],
        bits: &mut Vec<bool>,
        tight: bool,
        best: &mut Option<(Vec<bool>, Vec<usize>)>,
    ) {
        let n = g.vertex_count();
        if order.len() == n {
            if best.as_ref().is_none_or(|(b, _)| bits.as_slice() > b.as_slice()) {
                *best = Some((bits.clone(), order.clone()));
            }
            return;
        }
        for v in 0..n {
            if used[v] {
                continue;
            }
            let start = bits.len();
            bits.extend(column(g, order, v));
            let mut next_tight = false;
            let keep = match (tight, best.as_ref()) {
                (true, Some((b, _))) => match bits[start..].cmp(&b[start..bits.len()]) {
                    Ordering::Less => false,
                    Ordering::Equal => {
                        next_tight = true;
                        true
                    }
                    Ordering::Greater => true,
                },
                _ => true,
            };
            if keep {
                used[v] = true;
                order.push(v);
                go(g, order, used, bits, next_tight || best.is_none(), best);
                order.pop();
                used[v] = false;
            }
            bits.truncate(start);
        }
    }
    go(g, &mut order, &mut used, &mut bits, true, &mut best);
    best.map(|(_, o)| o).unwrap_or_default()
}

/// Individualization-refinement with automorphism pruning.
struct IrSearch<'a> {
    g: &'a Graph,
    best: Option<(Vec<bool>, Vec<usize>)>,
    first: Option<(Vec<bool>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl<'a> IrSearch<'a> {
    fn run(g: &'a Graph) -> Vec<usize> {
        let mut s = IrSearch { g, best: None, first: None, automorphisms: Vec::new() };
        let start = refine(g, initial_cells(g));
        s.descend(start, &mut Vec::new());
        s.best.unwrap().1
    }

    fn descend(&mut self, cells: Vec<Vec<usize>>, path: &mut Vec<usize>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            self.leaf(order);
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if tried.iter().any(|&t| self.same_orbit(path, t, v)) {
                continue;
            }
            tried.push(v);
            let mut next = cells.clone();
            let rest: Vec<usize> = next[target].iter().copied().filter(|&w| w != v).collect();
            next[target] = vec![v];
            next.insert(target + 1, rest);
            path.push(v);
            self.descend(refine(self.g, next), path);
            path.pop();
        }
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let bits = adjacency_string(self.g, &order);
        for reference in [&self.first, &self.best].into_iter().flatten() {
            if reference.0 == bits {
                let mut perm = vec![0; order.len()];
                for (pos, &v) in reference.1.iter().enumerate() {
                    perm[v] = order[pos];
                }
                self.automorphisms.push(perm);
                break;
            }
        }
        if self.first.is_none() {
            self.first = Some((bits.clone(), order.clone()));
        }
        if self.best.as_ref().is_none_or(|(b, _)| &bits > b) {
            self.best = Some((bits, order));
        }
    }

    /// Orbit test under the found automorphisms that fix `path` pointwise.
    fn same_orbit(&self, path: &[usize], a: usize, b: usize) -> bool {
        let gens: Vec<&Vec<usize>> = self.automorphisms.iter().filter(|p| path.iter().all(|&x| p[x] == x)).collect();
        if gens.is_empty() {
            return false;
        }
        let mut seen = vec![false; self.g.vertex_count()];
        let mut stack = vec![a];
        seen[a] = true;
        while let Some(x) = stack.pop() {
            if x == b {
                return true;
            }
            for p in &gens {
                let y = p[x];
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        false
    }
}

fn initial_cells(g: &Graph) -> Vec<Vec<usize>> {
    let mut with: Vec<usize> = g.loops().collect();
    let mut without: Vec<usize> = (0..g.vertex_count()).filter(|&v| !g.has_loop(v)).collect();
    with.sort_unstable();
    without.sort_unstable();
    [without, with].into_iter().filter(|c| !c.is_empty()).collect()
}

/// Equitable refinement; splits cells by neighbour counts into earlier cells.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut cell_of = vec![0usize; n];
    loop {
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        let k = cells.len();
        let mut next = Vec::with_capacity(k);
        for c in &cells {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = c
                .iter()
                .map(|&v| {
                    let mut sig = vec![0usize; k];
                    for &w in g.neighbors(v) {
                        sig[cell_of[w]] += 1;
                    }
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|x| x.1).collect());
                    start = i;
                }
            }
        }
        if next.len() == k {
            return next;
        }
        cells = next;
    }
}
