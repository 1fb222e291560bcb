//! Crowns: every vertex of a grid-colored graph becomes a gadget of cliques, one
//! vertex per incident edge plus two hub vertices inside the grid. The result is
//! always a line graph of a bipartite graph, which is emitted alongside.

use super::{GridColoredInstance, ReductionError};
use crate::graph::{bipartition, Graph, VertexColoring};
use crate::linegraph::RootWitness;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Role {
    Right,
    Left,
    Up,
    Down,
    UpLeft,
    DownRight,
}

impl Role {
    pub const ALL: [Role; 6] = [Role::Right, Role::Left, Role::Up, Role::Down, Role::UpLeft, Role::DownRight];

    pub fn symbol(self) -> char {
        match self {
            Role::Right => '→',
            Role::Left => '←',
            Role::Up => '↑',
            Role::Down => '↓',
            Role::UpLeft => '↖',
            Role::DownRight => '↘',
        }
    }

    pub fn code(self) -> &'static str {
        match self {
            Role::Right => "R",
            Role::Left => "L",
            Role::Up => "U",
            Role::Down => "D",
            Role::UpLeft => "UL",
            Role::DownRight => "DR",
        }
    }

    pub fn from_code(s: &str) -> Option<Role> {
        Role::ALL.into_iter().find(|r| r.code() == s)
    }

    /// Hub side of an interior gadget.
    fn upper_left(self) -> bool {
        matches!(self, Role::Left | Role::Up | Role::UpLeft)
    }

    /// Direction from cell `a` to the grid-adjacent cell `b`.
    fn between(a: (usize, usize), b: (usize, usize)) -> Option<Role> {
        match (b.0 as isize - a.0 as isize, b.1 as isize - a.1 as isize) {
            (0, 1) => Some(Role::Right),
            (0, -1) => Some(Role::Left),
            (-1, 0) => Some(Role::Up),
            (1, 0) => Some(Role::Down),
            _ => None,
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Gadget vertices, cliques and connecting edges before coloring.
struct Assembly {
    graph: Graph,
    /// `(source vertex, role)` per crown vertex.
    index: Vec<(usize, Role)>,
    /// Gadget clique of each crown vertex.
    clique: Vec<usize>,
    /// Connecting edge (matching or hub edge) of each crown vertex.
    connection: Vec<usize>,
    cliques: usize,
    connections: usize,
}

fn assemble(inst: &GridColoredInstance) -> Result<Assembly, ReductionError> {
    let k = inst.k;
    if k < 2 {
        return Err(ReductionError::BadParameter(format!("crown needs a grid side of at least 2, got {k}")));
    }
    let g = &inst.graph;
    if inst.coloring.target() != g || inst.coloring.pattern().vertex_count() != k * k {
        return Err(ReductionError::BadParameter("coloring does not map the instance into its grid".into()));
    }
    let cell = |v: usize| (inst.coloring.color(v) / k, inst.coloring.color(v) % k);
    let interior = |(i, j): (usize, usize)| i > 0 && j > 0 && i + 1 < k && j + 1 < k;

    let mut index = Vec::new();
    let mut clique = Vec::new();
    let mut copy_of: HashMap<(usize, usize), usize> = HashMap::new();
    let mut hubs = Vec::new();
    let mut cliques = 0;
    for v in 0..g.vertex_count() {
        let here = cell(v);
        let (a, b) = if interior(here) {
            cliques += 2;
            (cliques - 2, cliques - 1)
        } else {
            cliques += 1;
            (cliques - 1, cliques - 1)
        };
        if interior(here) {
            hubs.push((index.len(), index.len() + 1));
            index.extend([(v, Role::UpLeft), (v, Role::DownRight)]);
            clique.extend([a, b]);
        }
        for &w in g.neighbors(v) {
            let role = Role::between(here, cell(w)).ok_or_else(|| {
                ReductionError::BadParameter(format!("edge {{{v},{w}}} joins cells that are not grid-adjacent"))
            })?;
            copy_of.insert((v, w), index.len());
            index.push((v, role));
            clique.push(if role.upper_left() { a } else { b });
        }
    }
    let n = index.len();
    let mut connection = vec![usize::MAX; n];
    let mut links = Vec::new();
    for (u, v) in g.edges() {
        links.push((copy_of[&(u, v)], copy_of[&(v, u)]));
    }
    links.extend(hubs);
    for (c, &(x, y)) in links.iter().enumerate() {
        connection[x] = c;
        connection[y] = c;
    }
    let mut members = vec![Vec::new(); cliques];
    for (x, &c) in clique.iter().enumerate() {
        members[c].push(x);
    }
    let mut edges = links.clone();
    for m in &members {
        for (i, &x) in m.iter().enumerate() {
            edges.extend(m[i + 1..].iter().map(|&y| (x, y)));
        }
    }
    let graph = Graph::from_edges(n, edges)?;
    Ok(Assembly { graph, index, clique, connection, cliques, connections: links.len() })
}

#[derive(Clone, Debug)]
pub struct CrownGrid {
    pub k: usize,
    pub graph: Graph,
    /// `(row, column, role)` per vertex.
    pub labels: Vec<(usize, usize, Role)>,
}

impl CrownGrid {
    pub fn vertex_of(&self, i: usize, j: usize, role: Role) -> Option<usize> {
        self.labels.iter().position(|&l| l == (i, j, role))
    }
}

/// Crown of `grid(k)` colored by the identity; with `looped`, every vertex carries a loop.
pub fn crown_grid(k: usize, looped: bool) -> Result<CrownGrid, ReductionError> {
    let a = assemble(&GridColoredInstance::identity(k))?;
    let labels = a.index.iter().map(|&(c, r)| (c / k, c % k, r)).collect();
    let graph = if looped { a.graph.with_all_loops() } else { a.graph };
    Ok(CrownGrid { k, graph, labels })
}

#[derive(Clone, Debug)]
pub struct CrownOutput {
    pub crown: Graph,
    /// Into the looped crown grid: `(v, role)` goes to `(c(v), role)`.
    pub coloring_hat: VertexColoring,
    /// Bipartite `B` with `L(B) ≅ crown`, gadget cliques on one side.
    pub bipartite_witness: Graph,
    /// `witness_edges[x]` is the edge of `B` behind crown vertex `x`.
    pub witness_edges: Vec<(usize, usize)>,
    /// `(source vertex, role)` per crown vertex.
    pub gadget_index: Vec<(usize, Role)>,
    pub grid: CrownGrid,
}

impl CrownOutput {
    pub fn witness(&self) -> RootWitness {
        RootWitness {
            root: self.bipartite_witness.clone(),
            edge_map: self.witness_edges.clone(),
            bipartition: bipartition(&self.bipartite_witness),
        }
    }
}

pub fn crown(inst: &GridColoredInstance) -> Result<CrownOutput, ReductionError> {
    let a = assemble(inst)?;
    let grid = crown_grid(inst.k, true)?;
    let slot: HashMap<(usize, usize, Role), usize> = grid.labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let k = inst.k;
    let hat = a
        .index
        .iter()
        .map(|&(v, r)| {
            let c = inst.coloring.color(v);
            slot[&(c / k, c % k, r)]
        })
        .collect();
    let coloring_hat = VertexColoring::new(a.graph.clone(), grid.graph.clone(), hat)?;
    let witness_edges: Vec<(usize, usize)> =
        a.clique.iter().zip(&a.connection).map(|(&c, &m)| (c, a.cliques + m)).collect();
    let bipartite_witness = Graph::from_edges(a.cliques + a.connections, witness_edges.iter().copied())?;
    let used: Vec<usize> = (0..bipartite_witness.vertex_count()).filter(|&v| bipartite_witness.degree(v) > 0).collect();
    let mut renumber = vec![usize::MAX; bipartite_witness.vertex_count()];
    for (i, &v) in used.iter().enumerate() {
        renumber[v] = i;
    }
    let witness_edges: Vec<(usize, usize)> = witness_edges.iter().map(|&(x, y)| (renumber[x], renumber[y])).collect();
    let bipartite_witness = Graph::from_edges(used.len(), witness_edges.iter().copied())?;
    Ok(CrownOutput { crown: a.graph, coloring_hat, bipartite_witness, witness_edges, gadget_index: a.index, grid })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_isomorphic, named::*};
    use crate::linegraph::line_graph;
    use crate::reductions::clique_to_cpgrid;

    #[test]
    fn small_crown_grids() {
        assert!(is_isomorphic(&crown_grid(2, false).unwrap().graph, &cycle(8)));
        let g3 = crown_grid(3, false).unwrap();
        assert_eq!(g3.graph.vertex_count(), 26);
        assert_eq!(g3.labels.iter().filter(|l| (l.0, l.1) == (1, 1)).count(), 6);
        let looped = crown_grid(3, true).unwrap().graph;
        assert_eq!(looped.without_loops(), g3.graph);
        assert_eq!(looped.loop_count(), 26);
    }

    #[test]
    fn witnesses_are_bipartite_roots() {
        for inst in [GridColoredInstance::identity(3), clique_to_cpgrid(&complete(4), 3).unwrap()] {
            let out = crown(&inst).unwrap();
            let w = out.witness();
            assert!(w.is_bipartite());
            assert!(w.verify(&out.crown));
            if out.crown.vertex_count() <= 40 {
                assert!(is_isomorphic(&line_graph(&out.bipartite_witness).graph, &out.crown));
            }
        }
    }

    #[test]
    fn rejects_far_edges() {
        let mut inst = GridColoredInstance::identity(2);
        inst.k = 3;
        assert!(crown(&inst).is_err());
    }
}
