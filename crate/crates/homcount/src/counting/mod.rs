//! Exact counters for homomorphisms and related map species.

mod colorful;
mod fcolored;
mod matching;
pub(crate) mod search;
mod td;

pub use colorful::{colorful_incl_excl, colorful_incl_excl_with, delete_colors};
pub use fcolored::{cphoms_via_automorphisms, solve_fcolored_instance};
pub use matching::matching_number;
pub use td::{count_homs_td, tree_decomposition, treewidth, TreeDecomposition};

use crate::graph::{Graph, GraphError, VertexColoring};
use crate::Limits;
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use search::Search;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CountError {
    #[error("{what} has {got} vertices, budget is {limit}")]
    BudgetExceeded { what: &'static str, got: usize, limit: usize },
    #[error("{0:?} counting needs a vertex coloring")]
    MissingColoring(MapKind),
    #[error("coloring does not match: {0}")]
    ColoringMismatch(String),
    #[error("pattern is not a core")]
    NotACore,
    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("invalid coloring witness: {0}")]
    InvalidWitness(#[from] GraphError),
    #[error("deadline passed after {done} of {total} terms")]
    DeadlineExceeded { done: u64, total: u64 },
    #[error("oracle failed: {0}")]
    Oracle(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MapKind {
    Hom,
    Emb,
    StrEmb,
    Aut,
    CpHom,
    ColorfulHom,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PatternKind {
    Sub,
    IndSub,
}

pub(crate) fn check_budget(what: &'static str, got: usize, limit: usize) -> Result<(), CountError> {
    if got > limit {
        Err(CountError::BudgetExceeded { what, got, limit })
    } else {
        Ok(())
    }
}

/// Counts maps `h → g` of the given kind. `Aut` counts automorphisms of `h` and
/// ignores `g`. A pattern loop requires a target loop at the image.
pub fn count_maps(
    kind: MapKind,
    h: &Graph,
    g: &Graph,
    coloring: Option<&VertexColoring>,
) -> Result<BigUint, CountError> {
    count_maps_with(kind, h, g, coloring, &Limits::default())
}

pub fn count_maps_with(
    kind: MapKind,
    h: &Graph,
    g: &Graph,
    coloring: Option<&VertexColoring>,
    limits: &Limits,
) -> Result<BigUint, CountError> {
    let exec = limits.exec;
    let n = match kind {
        MapKind::Hom => {
            check_budget("pattern", h.vertex_count(), limits.pattern_budget)?;
            Search::new(h, g).count(exec)
        }
        MapKind::Emb => {
            check_budget("pattern", h.vertex_count(), limits.pattern_budget)?;
            Search::new(h, g).injective().count(exec)
        }
        MapKind::StrEmb => {
            check_budget("pattern", h.vertex_count(), limits.pattern_budget)?;
            Search::new(h, g).strong().count(exec)
        }
        MapKind::Aut => {
            check_budget("pattern", h.vertex_count(), limits.colored_pattern_budget)?;
            Search::new(h, h).strong().count(exec)
        }
        MapKind::CpHom => {
            let c = coloring.ok_or(CountError::MissingColoring(kind))?;
            check_coloring(h, g, c)?;
            check_budget("pattern", h.vertex_count(), limits.colored_pattern_budget)?;
            Search::new(h, g).restrict(c.classes()).count(exec)
        }
        MapKind::ColorfulHom => {
            let c = coloring.ok_or(CountError::MissingColoring(kind))?;
            if c.target() != g {
                return Err(CountError::ColoringMismatch("coloring target differs from g".into()));
            }
            check_budget("pattern", h.vertex_count(), limits.colored_pattern_budget)?;
            Search::new(h, g).colorful(c.assignment(), c.pattern().vertex_count()).count(exec)
        }
    };
    Ok(BigUint::from(n))
}

fn check_coloring(h: &Graph, g: &Graph, c: &VertexColoring) -> Result<(), CountError> {
    if c.target() != g {
        return Err(CountError::ColoringMismatch("coloring target differs from g".into()));
    }
    if c.pattern().vertex_count() != h.vertex_count() {
        return Err(CountError::ColoringMismatch(format!(
            "coloring has {} colors, pattern has {} vertices",
            c.pattern().vertex_count(),
            h.vertex_count()
        )));
    }
    Ok(())
}

pub fn count_homs(h: &Graph, g: &Graph) -> Result<BigUint, CountError> {
    count_maps(MapKind::Hom, h, g, None)
}

pub fn exists_hom(h: &Graph, g: &Graph) -> bool {
    Search::new(h, g).find().is_some()
}

pub fn find_hom(h: &Graph, g: &Graph) -> Option<Vec<usize>> {
    Search::new(h, g).find()
}

/// Visits homomorphisms `h → g` until `f` returns false.
pub fn for_each_hom(h: &Graph, g: &Graph, f: &mut dyn FnMut(&[usize]) -> bool) {
    Search::new(h, g).for_each(f)
}

pub fn automorphism_count(h: &Graph) -> Result<BigUint, CountError> {
    count_maps(MapKind::Aut, h, h, None)
}

/// `#Sub = #Emb / #Aut` and `#IndSub = #StrEmb / #Aut`.
pub fn count_patterns(kind: PatternKind, h: &Graph, g: &Graph) -> Result<BigUint, CountError> {
    count_patterns_with(kind, h, g, &Limits::default())
}

pub fn count_patterns_with(kind: PatternKind, h: &Graph, g: &Graph, limits: &Limits) -> Result<BigUint, CountError> {
    let maps = match kind {
        PatternKind::Sub => count_maps_with(MapKind::Emb, h, g, None, limits)?,
        PatternKind::IndSub => count_maps_with(MapKind::StrEmb, h, g, None, limits)?,
    };
    let aut = count_maps_with(MapKind::Aut, h, h, None, limits)?;
    let (q, r) = maps.div_rem(&aut);
    assert!(r.is_zero(), "automorphism count {aut} does not divide {maps}");
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn n(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn small_counts() {
        let g = petersen();
        assert_eq!(count_homs(&complete(1), &g).unwrap(), n(10));
        assert_eq!(count_homs(&complete(3), &complete(3)).unwrap(), n(6));
        assert_eq!(automorphism_count(&complete(3)).unwrap(), n(6));
        assert_eq!(count_homs(&cycle(5), &cycle(7)).unwrap(), n(0));
        assert_eq!(count_homs(&Graph::empty(0), &g).unwrap(), n(1));
        assert_eq!(automorphism_count(&petersen()).unwrap(), n(120));
    }

    #[test]
    fn loops_in_patterns_need_target_loops() {
        let looped = looped_point();
        assert_eq!(count_homs(&looped, &complete(3)).unwrap(), n(0));
        assert_eq!(count_homs(&looped, &complete(3).with_all_loops()).unwrap(), n(3));
        assert_eq!(count_homs(&complete(3), &looped).unwrap(), n(1));
    }

    #[test]
    fn pattern_counts() {
        assert_eq!(count_patterns(PatternKind::Sub, &path(1), &petersen()).unwrap(), n(15));
        assert_eq!(count_patterns(PatternKind::Sub, &path(2), &complete(4)).unwrap(), n(12));
        assert_eq!(count_patterns(PatternKind::IndSub, &complete(3), &star(3)).unwrap(), n(0));
        assert_eq!(count_patterns(PatternKind::IndSub, &path(2), &cycle(5)).unwrap(), n(5));
    }

    #[test]
    fn budget_is_enforced() {
        let big = cycle(11);
        assert!(matches!(count_homs(&big, &big), Err(CountError::BudgetExceeded { .. })));
    }

    #[test]
    fn color_prescribed_and_colorful() {
        let k3 = complete(3);
        let id = VertexColoring::new(k3.clone(), k3.clone(), vec![0, 1, 2]).unwrap();
        assert_eq!(count_maps(MapKind::CpHom, &k3, &k3, Some(&id)).unwrap(), n(1));
        assert_eq!(count_maps(MapKind::ColorfulHom, &k3, &k3, Some(&id)).unwrap(), n(6));
        let k2 = complete(2);
        let c = VertexColoring::new(k2.clone(), k2.clone(), vec![0, 1]).unwrap();
        assert_eq!(count_maps(MapKind::ColorfulHom, &k2, &k2, Some(&c)).unwrap(), n(2));
        assert!(count_maps(MapKind::CpHom, &k3, &k3, None).is_err());
    }
}
