//! Clique counting through homomorphism counts from crown grids into König graphs.
//!
//! clique instance → connected instance → grid-colored instance → crown, then
//! colorful homs by inclusion–exclusion over deleted `ĉ` colors, divided by the
//! automorphisms of the crown grid and by `k!`.

use super::{clique_to_cpgrid, connectify_clique, crown, crown_grid, factorial, ReductionError};
use crate::counting::{automorphism_count, colorful_incl_excl_with, count_maps_with, CountError, MapKind};
use crate::graph::Graph;
use crate::Limits;
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use std::time::Instant;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineReport {
    pub cliques: BigUint,
    /// Clique size after connectification.
    pub k: usize,
    pub crown_vertices: usize,
    pub pattern_vertices: usize,
    pub colorful: BigUint,
    pub automorphisms: BigUint,
    pub cphoms: BigUint,
}

/// Plain backtracking `#Hom(pattern, target)` with the pattern budget lifted to the pattern.
pub fn brute_force_oracle(pattern: &Graph, target: &Graph) -> Result<BigUint, CountError> {
    let limits = Limits::default().with_pattern_budget(pattern.vertex_count());
    count_maps_with(MapKind::Hom, pattern, target, None, &limits)
}

/// Number of `k`-cliques of `g`, obtained only from `oracle(crown_grid, ·)` answers
/// on vertex-deleted crowns.
pub fn koenig_hardness_pipeline<F>(
    g: &Graph,
    k: usize,
    oracle: F,
    limits: &Limits,
    deadline: Option<Instant>,
) -> Result<PipelineReport, ReductionError>
where
    F: Fn(&Graph, &Graph) -> Result<BigUint, CountError> + Sync + Send,
{
    let (connected, k) = connectify_clique(g, k)?;
    let inst = clique_to_cpgrid(&connected, k)?;
    let out = crown(&inst)?;
    let pattern = crown_grid(k, false)?.graph;
    let colorful =
        colorful_incl_excl_with(&pattern, &out.crown, &out.coloring_hat, |t| oracle(&pattern, t), limits, deadline)?;
    let automorphisms = automorphism_count(&pattern)?;
    let cphoms = exact_div("colorful count over automorphisms", &colorful, &automorphisms)?;
    let cliques = exact_div("grid homs over k!", &cphoms, &factorial(k))?;
    Ok(PipelineReport {
        cliques,
        k,
        crown_vertices: out.crown.vertex_count(),
        pattern_vertices: pattern.vertex_count(),
        colorful,
        automorphisms,
        cphoms,
    })
}

/// Same chain with the color-prescribed count from the crown grid into the crown
/// taken directly by backtracking instead of inclusion–exclusion.
pub fn koenig_direct(g: &Graph, k: usize, limits: &Limits) -> Result<PipelineReport, ReductionError> {
    let (connected, k) = connectify_clique(g, k)?;
    let inst = clique_to_cpgrid(&connected, k)?;
    let out = crown(&inst)?;
    let pattern = crown_grid(k, false)?.graph;
    let cphoms = count_maps_with(MapKind::CpHom, &pattern, &out.crown, Some(&out.coloring_hat), limits)?;
    let automorphisms = automorphism_count(&pattern)?;
    let cliques = exact_div("grid homs over k!", &cphoms, &factorial(k))?;
    Ok(PipelineReport {
        cliques,
        k,
        crown_vertices: out.crown.vertex_count(),
        pattern_vertices: pattern.vertex_count(),
        colorful: &cphoms * &automorphisms,
        automorphisms,
        cphoms,
    })
}

fn exact_div(what: &'static str, num: &BigUint, den: &BigUint) -> Result<BigUint, ReductionError> {
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(ReductionError::Inexact { what, num: num.clone(), den: den.clone() });
    }
    Ok(q)
}
