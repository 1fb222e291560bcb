//! Counting on targets that come with a coloring into a fixed graph.

use super::{automorphism_count, count_homs_td, count_maps_with, exists_hom, tree_decomposition, CountError, MapKind};
use crate::graph::{is_core, Graph, VertexColoring};
use crate::Limits;
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

/// `#Hom(h, g) / #Aut(h)` for a core `h` and an `h`-colored `g`.
pub fn cphoms_via_automorphisms(h: &Graph, g: &Graph, coloring: &VertexColoring) -> Result<BigUint, CountError> {
    if coloring.target() != g || coloring.pattern() != h {
        return Err(CountError::ColoringMismatch("expected an h-coloring of g".into()));
    }
    if !is_core(h) {
        return Err(CountError::NotACore);
    }
    let homs = count_maps_with(MapKind::Hom, h, g, None, &Limits::default().with_pattern_budget(64))?;
    let aut = automorphism_count(h)?;
    let (q, r) = homs.div_rem(&aut);
    assert!(r.is_zero(), "automorphism count {aut} does not divide {homs}");
    Ok(q)
}

/// `#Hom(h, g)` for a target `g` that is `f`-colored by `witness`.
///
/// Bounded treewidth goes through the decomposition DP. Otherwise a pattern
/// without a homomorphism into `f` has no homomorphism into `g` either.
pub fn solve_fcolored_instance(
    h: &Graph,
    g: &Graph,
    f: &Graph,
    witness: &VertexColoring,
    width_budget: usize,
) -> Result<BigUint, CountError> {
    if witness.target() != g || witness.pattern() != f {
        return Err(CountError::ColoringMismatch("witness must color g by f".into()));
    }
    let td = tree_decomposition(h);
    if td.width() <= width_budget && h.is_simple() {
        return count_homs_td(h, &td, g);
    }
    if !exists_hom(h, f) {
        return Ok(BigUint::zero());
    }
    log::warn!("pattern of width {} maps into the coloring graph; falling back to brute force", td.width());
    count_maps_with(MapKind::Hom, h, g, None, &Limits::default().with_pattern_budget(64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::count_homs;
    use crate::graph::named::*;

    #[test]
    fn triangle_identity() {
        let k3 = complete(3);
        let id = VertexColoring::new(k3.clone(), k3.clone(), vec![0, 1, 2]).unwrap();
        assert_eq!(cphoms_via_automorphisms(&k3, &k3, &id).unwrap(), BigUint::from(1u32));
    }

    #[test]
    fn non_core_is_rejected() {
        let p = path(2);
        let c = VertexColoring::new(p.clone(), p.clone(), vec![0, 1, 2]).unwrap();
        assert_eq!(cphoms_via_automorphisms(&p, &p, &c), Err(CountError::NotACore));
    }

    #[test]
    fn edge_into_hexagon() {
        let k2 = complete(2);
        let c6 = cycle(6);
        let c = VertexColoring::new(c6.clone(), k2.clone(), vec![0, 1, 0, 1, 0, 1]).unwrap();
        let got = cphoms_via_automorphisms(&k2, &c6, &c).unwrap();
        assert_eq!(got, count_homs(&k2, &c6).unwrap() / 2u32);
    }

    #[test]
    fn router_branches() {
        let k2 = complete(2);
        let c6 = cycle(6);
        let w = VertexColoring::new(c6.clone(), k2.clone(), vec![0, 1, 0, 1, 0, 1]).unwrap();
        assert!(solve_fcolored_instance(&cycle(5), &c6, &k2, &w, 1).unwrap().is_zero());
        assert_eq!(solve_fcolored_instance(&path(3), &c6, &k2, &w, 1).unwrap(), count_homs(&path(3), &c6).unwrap());
        assert_eq!(solve_fcolored_instance(&complete(1), &c6, &k2, &w, 0).unwrap(), BigUint::from(6u32));
    }
}
