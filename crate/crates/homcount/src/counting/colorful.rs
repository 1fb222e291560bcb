//! Colorful homomorphisms by inclusion–exclusion over deleted color classes.

use super::{check_budget, CountError};
use crate::graph::{induced_subgraph, Graph, VertexColoring};
use crate::{par, Limits};
use num_bigint::{BigInt, BigUint, Sign};
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

/// Target with every vertex whose color lies in `deleted` (a bitmask) removed.
pub fn delete_colors(g: &Graph, colors: &[usize], deleted: u64) -> Graph {
    let keep: Vec<usize> = (0..g.vertex_count()).filter(|&v| deleted >> colors[v] & 1 == 0).collect();
    induced_subgraph(g, &keep)
}

/// `Σ_{J ⊆ colors} (−1)^{|J|} · oracle(g ∖ J)`, where `oracle` counts homomorphisms
/// from `h`. The terms are evaluated in parallel unless `limits.exec` is sequential.
pub fn colorful_incl_excl<F>(h: &Graph, g: &Graph, coloring: &VertexColoring, oracle: F) -> Result<BigUint, CountError>
where
    F: Fn(&Graph) -> Result<BigUint, CountError> + Sync + Send,
{
    colorful_incl_excl_with(h, g, coloring, oracle, &Limits::default(), None)
}

pub fn colorful_incl_excl_with<F>(
    h: &Graph,
    g: &Graph,
    coloring: &VertexColoring,
    oracle: F,
    limits: &Limits,
    deadline: Option<Instant>,
) -> Result<BigUint, CountError>
where
    F: Fn(&Graph) -> Result<BigUint, CountError> + Sync + Send,
{
    if coloring.target() != g {
        return Err(CountError::ColoringMismatch("coloring target differs from g".into()));
    }
    let k = coloring.pattern().vertex_count();
    if k != h.vertex_count() {
        return Err(CountError::ColoringMismatch(format!("{k} colors for a pattern on {} vertices", h.vertex_count())));
    }
    check_budget("color set", k, limits.subset_budget.min(63))?;
    let total = 1u64 << k;
    let done = AtomicU64::new(0);
    let colors = coloring.assignment();
    const CHUNK: u64 = 1024;
    let chunks = total.div_ceil(CHUNK);
    let partial = par::map_range(limits.exec, chunks as usize, |chunk| {
        let mut acc = BigInt::from(0);
        let start = chunk as u64 * CHUNK;
        for mask in start..(start + CHUNK).min(total) {
            if let Some(d) = deadline {
                if Instant::now() > d {
                    return Err(CountError::DeadlineExceeded { done: done.load(Ordering::Relaxed), total });
                }
            }
            let value = oracle(&delete_colors(g, colors, mask))?;
            done.fetch_add(1, Ordering::Relaxed);
            let sign = if mask.count_ones() % 2 == 0 { Sign::Plus } else { Sign::Minus };
            acc += BigInt::from_biguint(sign, value);
        }
        Ok(acc)
    });
    let mut acc = BigInt::from(0);
    for t in partial {
        acc += t?;
    }
    acc.to_biguint().ok_or_else(|| CountError::Oracle("inclusion–exclusion sum is negative".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::{count_homs, count_maps, MapKind};
    use crate::graph::named::*;

    #[test]
    fn edge_into_edge() {
        let k2 = complete(2);
        let c = VertexColoring::new(k2.clone(), k2.clone(), vec![0, 1]).unwrap();
        let r = colorful_incl_excl(&k2, &k2, &c, |t| count_homs(&k2, t)).unwrap();
        assert_eq!(r, BigUint::from(2u32));
    }

    #[test]
    fn missing_color_gives_zero() {
        let p = path(2);
        let target = cycle(6);
        // Color 2 of the path is never used.
        let c = VertexColoring::new(target.clone(), p.clone(), vec![0, 1, 0, 1, 0, 1]).unwrap();
        let r = colorful_incl_excl(&p, &target, &c, |t| count_homs(&p, t)).unwrap();
        assert_eq!(r, BigUint::from(0u32));
        let direct = count_maps(MapKind::ColorfulHom, &p, &target, Some(&c)).unwrap();
        assert_eq!(direct, r);
    }

    #[test]
    fn deadline_is_reported() {
        let k2 = complete(2);
        let c = VertexColoring::new(k2.clone(), k2.clone(), vec![0, 1]).unwrap();
        let past = Instant::now() - std::time::Duration::from_secs(1);
        let r = colorful_incl_excl_with(&k2, &k2, &c, |t| count_homs(&k2, t), &Limits::default(), Some(past));
        assert!(matches!(r, Err(CountError::DeadlineExceeded { .. })));
    }
}
