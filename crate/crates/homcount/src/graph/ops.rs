use super::{Graph, GraphError};
use crate::partition::SetPartition;

/// Categorical product. Vertex `(x, a)` has index `x * |V(a)| + a`.
pub fn tensor_product(g: &Graph, a: &Graph) -> Graph {
    let na = a.vertex_count();
    let n = g.vertex_count() * na;
    let mut adj = vec![Vec::new(); n];
    let mut loops = vec![false; n];
    let full = |v: usize, graph: &Graph| -> Vec<usize> {
        let mut list = graph.neighbors(v).to_vec();
        if graph.has_loop(v) {
            list.push(v);
        }
        list
    };
    for x in 0..g.vertex_count() {
        let gx = full(x, g);
        for y in 0..na {
            let ay = full(y, a);
            let me = x * na + y;
            for &x2 in &gx {
                for &y2 in &ay {
                    let other = x2 * na + y2;
                    if other == me {
                        loops[me] = true;
                    } else {
                        adj[me].push(other);
                    }
                }
            }
        }
    }
    Graph::from_parts(n, adj, loops)
}

#[derive(Clone, Debug)]
pub struct DisjointUnion {
    pub graph: Graph,
    /// `offsets[i]` is the index of the first vertex of part `i`; one extra entry holds `n`.
    pub offsets: Vec<usize>,
}

impl DisjointUnion {
    pub fn part(&self, i: usize) -> Graph {
        let range: Vec<usize> = (self.offsets[i]..self.offsets[i + 1]).collect();
        induced_subgraph(&self.graph, &range)
    }
}

pub fn disjoint_union(parts: &[&Graph]) -> DisjointUnion {
    let mut offsets = Vec::with_capacity(parts.len() + 1);
    let mut n = 0;
    for p in parts {
        offsets.push(n);
        n += p.vertex_count();
    }
    offsets.push(n);
    let mut adj = Vec::with_capacity(n);
    let mut loops = Vec::with_capacity(n);
    for (p, &off) in parts.iter().zip(&offsets) {
        for v in 0..p.vertex_count() {
            adj.push(p.neighbors(v).iter().map(|&w| w + off).collect());
            loops.push(p.has_loop(v));
        }
    }
    DisjointUnion { graph: Graph::from_parts(n, adj, loops), offsets }
}

/// Subgraph induced on `keep`, with vertex `keep[i]` renamed to `i`.
pub fn induced_subgraph(g: &Graph, keep: &[usize]) -> Graph {
    let mut index = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in keep.iter().enumerate() {
        index[v] = i;
    }
    let adj = keep
        .iter()
        .map(|&v| g.neighbors(v).iter().filter_map(|&w| (index[w] != usize::MAX).then_some(index[w])).collect())
        .collect();
    let loops = keep.iter().map(|&v| g.has_loop(v)).collect();
    Graph::from_parts(keep.len(), adj, loops)
}

/// One vertex per block, in block order. Fails if a block holds an edge or a loop.
pub fn quotient(g: &Graph, rho: &SetPartition) -> Result<Graph, GraphError> {
    if rho.ground_size() != g.vertex_count() {
        return Err(GraphError::PartitionSize { expected: g.vertex_count(), got: rho.ground_size() });
    }
    let block = rho.block_of();
    let mut adj = vec![Vec::new(); rho.block_count()];
    if let Some(v) = g.loops().next() {
        return Err(GraphError::SelfLoopRejection(v, v));
    }
    for (u, v) in g.edges() {
        let (bu, bv) = (block[u], block[v]);
        if bu == bv {
            return Err(GraphError::SelfLoopRejection(u, v));
        }
        adj[bu].push(bv);
        adj[bv].push(bu);
    }
    Ok(Graph::from_parts(rho.block_count(), adj, vec![false; rho.block_count()]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::graph::{components, is_isomorphic};

    #[test]
    fn edge_times_edge_is_two_edges() {
        let p = tensor_product(&complete(2), &complete(2));
        assert_eq!(p.vertex_count(), 4);
        assert_eq!(p.edge_count(), 2);
        assert_eq!(components(&p).len(), 2);
    }

    #[test]
    fn looped_point_is_identity() {
        let g = cycle(5);
        assert!(is_isomorphic(&tensor_product(&g, &looped_point()), &g));
        assert!(is_isomorphic(&tensor_product(&looped_point(), &g), &g));
    }

    #[test]
    fn loops_multiply() {
        let a = Graph::from_edges(2, [(0, 0), (0, 1)]).unwrap();
        let p = tensor_product(&a, &a);
        assert!(p.has_loop(0));
        assert!(!p.has_loop(3));
    }

    #[test]
    fn union_of_triangles() {
        let t = complete(3);
        let u = disjoint_union(&[&t, &t]);
        assert_eq!(u.graph.vertex_count(), 6);
        assert_eq!(u.graph.edge_count(), 6);
        assert_eq!(components(&u.graph).len(), 2);
        assert_eq!(u.part(1), t);
        assert_eq!(disjoint_union(&[]).graph.vertex_count(), 0);
    }

    #[test]
    fn quotient_of_path() {
        let p2 = path(2);
        let merged = SetPartition::from_blocks(3, vec![vec![0, 2], vec![1]]).unwrap();
        assert!(is_isomorphic(&quotient(&p2, &merged).unwrap(), &complete(2)));
        let bad = SetPartition::from_blocks(3, vec![vec![0, 1], vec![2]]).unwrap();
        assert!(matches!(quotient(&p2, &bad), Err(GraphError::SelfLoopRejection(..))));
        let id = SetPartition::singletons(3);
        assert_eq!(quotient(&p2, &id).unwrap(), p2);
    }
}
