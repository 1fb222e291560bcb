//! `Q[H]` with `#Hom(H, L(G)) = #Hom(Q[H], G)` for every bipartite `G`.
//!
//! Homs from `H` split over spasms `H/ρ` into embeddings, embeddings split over
//! edge supersets `H'` into strong embeddings, i.e. `#Aut(H')` times induced copies.
//! An induced copy of `H'` in a line graph of a bipartite graph exists only when
//! `H' = L(F)` with `F` bipartite, and then corresponds to a copy of `F`. Finally
//! `#Sub(F, ·)` is expanded over the spasms of `F`.

use super::root_graph;
use crate::counting::automorphism_count;
use crate::graph::{canonical_form, quotient, CanonicalForm, Graph, GraphError};
use crate::partition::{partition_mobius, spasm_partitions};
use crate::quantum::{for_each_superset, QuantumError, QuantumGraph};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use std::collections::HashMap;

pub const LINE_PATTERN_VERTEX_LIMIT: usize = 6;

pub fn line_pattern_quantum(h: &Graph) -> Result<QuantumGraph, QuantumError> {
    if h.vertex_count() > LINE_PATTERN_VERTEX_LIMIT {
        return Err(QuantumError::BudgetExceeded {
            what: "pattern size",
            got: h.vertex_count(),
            limit: LINE_PATTERN_VERTEX_LIMIT,
        });
    }
    if let Some(v) = h.loops().next() {
        return Err(GraphError::SelfLoopRejection(v, v).into());
    }
    let mut memo: HashMap<CanonicalForm, Option<QuantumGraph>> = HashMap::new();
    let mut out = QuantumGraph::new();
    let one = BigRational::one();
    for rho in spasm_partitions(h) {
        let spasm = quotient(h, &rho)?;
        let mut supersets = Vec::new();
        for_each_superset(&spasm, |s| supersets.push(s.clone()))?;
        for sup in supersets {
            let form = canonical_form(&sup);
            if !memo.contains_key(&form) {
                let c = contribution(&sup)?;
                memo.insert(form.clone(), c);
            }
            if let Some(c) = &memo[&form] {
                out.add(c, &one);
            }
        }
    }
    Ok(out)
}

/// `#Aut(H') / #Aut(F) · Σ_δ μ(δ) · F/δ` if `H' = L(F)` with `F` bipartite.
fn contribution(line: &Graph) -> Result<Option<QuantumGraph>, QuantumError> {
    let Ok(w) = root_graph(line) else {
        return Ok(None);
    };
    if !w.is_bipartite() {
        return Ok(None);
    }
    let f = w.root;
    let scale = BigRational::new(BigInt::from(automorphism_count(line)?), BigInt::from(automorphism_count(&f)?));
    let mut q = QuantumGraph::new();
    for delta in spasm_partitions(&f) {
        q.add_term(&quotient(&f, &delta)?, &scale * BigRational::from_integer(partition_mobius(&delta)));
    }
    Ok(Some(q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::count_homs;
    use crate::graph::named::*;
    use crate::linegraph::line_graph;
    use crate::quantum::evaluate_integral;
    use num_bigint::BigUint;

    #[test]
    fn triangle_into_claw() {
        let q = line_pattern_quantum(&complete(3)).unwrap();
        assert_eq!(evaluate_integral(&q, &star(3)).unwrap(), BigUint::from(6u32));
    }

    #[test]
    fn single_vertex_counts_edges() {
        let q = line_pattern_quantum(&complete(1)).unwrap();
        for g in [complete_bipartite(2, 3), path(4), cycle(6)] {
            assert_eq!(evaluate_integral(&q, &g).unwrap(), BigUint::from(g.edge_count()));
        }
    }

    #[test]
    fn identity_on_bipartite_targets() {
        for h in [path(2), cycle(4), path(3)] {
            let q = line_pattern_quantum(&h).unwrap();
            for g in [complete_bipartite(2, 3), cycle(6), path(5)] {
                let lhs = count_homs(&h, &line_graph(&g).graph).unwrap();
                assert_eq!(evaluate_integral(&q, &g).unwrap(), lhs);
            }
        }
    }
}
