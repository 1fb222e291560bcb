//! Reduction gadgets: clique counting into color-prescribed grid homomorphisms,
//! crowns into König graphs, the Kneser universality encoding, and
//! no-homomorphism certificates.

mod certificate;
mod crown;
mod pipeline;
mod universality;

pub use certificate::{check_certificate, no_hom_certificate, Certification, ChromaticLower, Hints, NoHomCertificate};
pub use crown::{crown, crown_grid, CrownGrid, CrownOutput, Role};
pub use pipeline::{brute_force_oracle, koenig_direct, koenig_hardness_pipeline, PipelineReport};
pub use universality::{
    pair_bits, universality_assemble, universality_decode, universality_encode, unpair_bits, AnswerOracle, Decoded,
    Family, InstanceSource, Reject, TensorToy, UniversalityInstance,
};

use crate::counting::CountError;
use crate::generators::{grid, GenError};
use crate::graph::{components, Graph, GraphError, VertexColoring};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("invalid coloring: {0}")]
    InvalidColoring(#[from] GraphError),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("{what} is {got}, budget is {limit}")]
    BudgetExceeded { what: &'static str, got: usize, limit: usize },
    #[error(transparent)]
    Count(#[from] CountError),
    #[error(transparent)]
    Generator(#[from] GenError),
    #[error("{what}: {num} is not divisible by {den}")]
    Inexact { what: &'static str, num: BigUint, den: BigUint },
}

/// A graph colored into the `k × k` grid, with the factor that turns
/// color-prescribed grid homomorphisms into the source count.
#[derive(Clone, Debug)]
pub struct GridColoredInstance {
    pub k: usize,
    pub graph: Graph,
    /// Into `grid(k)`; cell `(i, j)` is color `i * k + j`.
    pub coloring: VertexColoring,
    pub normalizer: BigRational,
    /// Source pair `(u, v)` behind each vertex, when built from a clique instance.
    pub pairs: Vec<(usize, usize)>,
}

impl GridColoredInstance {
    /// `grid(k)` colored by the identity.
    pub fn identity(k: usize) -> Self {
        let g = grid(k);
        let ids: Vec<usize> = (0..k * k).collect();
        let coloring = VertexColoring::new(g.graph.clone(), g.graph.clone(), ids).expect("identity is a homomorphism");
        GridColoredInstance { k, graph: g.graph, coloring, normalizer: BigRational::one(), pairs: g.labels }
    }
}

/// A connected graph with the same number of cliques, and the clique size to count there.
///
/// `k = 1` and `k = 2` become a path with `|V(g)|` or `|E(g)|` edges counted for
/// 2-cliques. For `k ≥ 3` the components are chained by bridges through their
/// first vertices; bridges lie in no triangle.
pub fn connectify_clique(g: &Graph, k: usize) -> Result<(Graph, usize), ReductionError> {
    use crate::graph::named::path;
    match k {
        0 => Err(ReductionError::BadParameter("clique size must be positive".into())),
        1 => Ok((path(g.vertex_count()), 2)),
        2 => Ok((path(g.edge_count()), 2)),
        _ => {
            let firsts: Vec<usize> = components(g).iter().map(|c| c[0]).collect();
            let bridges = firsts.windows(2).map(|w| (w[0], w[1]));
            Ok((g.without_loops().with_edges(bridges)?, k))
        }
    }
}

/// Color-prescribed homomorphisms from `grid(k)` into the result, divided by `k!`,
/// count the `k`-cliques of `g`.
///
/// Diagonal cells hold `(v, v)`, off-diagonal cells every ordered pair `(u, v)`
/// spanning an edge. Cells adjacent in the grid are joined when the pairs agree on
/// the shared index: the first coordinate within a row, the second within a column.
pub fn clique_to_cpgrid(g: &Graph, k: usize) -> Result<GridColoredInstance, ReductionError> {
    if k < 2 {
        return Err(ReductionError::BadParameter(format!("grid side {k} is below 2")));
    }
    let mut pairs = Vec::new();
    let mut color = Vec::new();
    let mut first_of_cell = Vec::with_capacity(k * k + 1);
    let arcs: Vec<(usize, usize)> = g.edges().flat_map(|(u, v)| [(u, v), (v, u)]).collect();
    for i in 0..k {
        for j in 0..k {
            first_of_cell.push(pairs.len());
            if i == j {
                pairs.extend((0..g.vertex_count()).map(|v| (v, v)));
            } else {
                pairs.extend(arcs.iter().copied());
            }
            color.resize(pairs.len(), i * k + j);
        }
    }
    first_of_cell.push(pairs.len());
    let cell = |c: usize| first_of_cell[c]..first_of_cell[c + 1];
    let mut edges = Vec::new();
    for i in 0..k {
        for j in 0..k {
            let here = i * k + j;
            if j + 1 < k {
                join(&pairs, cell(here), cell(here + 1), |a, b| a.0 == b.0, &mut edges);
            }
            if i + 1 < k {
                join(&pairs, cell(here), cell(here + k), |a, b| a.1 == b.1, &mut edges);
            }
        }
    }
    let graph = Graph::from_edges(pairs.len(), edges)?;
    let coloring = VertexColoring::new(graph.clone(), grid(k).graph, color)?;
    let normalizer = BigRational::new(BigInt::one(), BigInt::from(factorial(k)));
    Ok(GridColoredInstance { k, graph, coloring, normalizer, pairs })
}

fn join(
    pairs: &[(usize, usize)],
    a: std::ops::Range<usize>,
    b: std::ops::Range<usize>,
    agree: impl Fn((usize, usize), (usize, usize)) -> bool,
    out: &mut Vec<(usize, usize)>,
) {
    for x in a {
        for y in b.clone() {
            if agree(pairs[x], pairs[y]) {
                out.push((x, y));
            }
        }
    }
}

pub fn factorial(k: usize) -> BigUint {
    (1..=k).fold(BigUint::one(), |acc, i| acc * i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::{count_maps, MapKind};
    use crate::graph::{disjoint_union, is_connected, named::*};
    use crate::oracle::clique_count;

    fn cphoms(inst: &GridColoredInstance) -> BigUint {
        count_maps(MapKind::CpHom, &grid(inst.k).graph, &inst.graph, Some(&inst.coloring)).unwrap()
    }

    #[test]
    fn connectify_keeps_triangles() {
        let g = disjoint_union(&[&complete(4), &complete(4)]).graph;
        let (c, k) = connectify_clique(&g, 3).unwrap();
        assert!(is_connected(&c));
        assert_eq!((c.vertex_count(), k), (8, 3));
        assert_eq!(clique_count(&c, 3), 8);
        let (p, k) = connectify_clique(&petersen(), 1).unwrap();
        assert_eq!((p.edge_count(), k), (10, 2));
        let (e, _) = connectify_clique(&Graph::empty(4), 3).unwrap();
        assert!(is_connected(&e));
        assert_eq!(clique_count(&e, 3), 0);
    }

    #[test]
    fn cpgrid_counts_cliques() {
        for (g, k, cliques) in [(complete(4), 3, 4u32), (complete(5), 3, 10), (cycle(5), 3, 0), (complete(4), 2, 6)] {
            let inst = clique_to_cpgrid(&g, k).unwrap();
            assert_eq!(cphoms(&inst), BigUint::from(cliques) * factorial(k));
        }
    }
}
