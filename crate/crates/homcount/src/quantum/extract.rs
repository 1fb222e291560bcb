//! Recovering per-constituent hom counts from an oracle for the whole quantum graph.
//!
//! Querying `g × A` yields `Σ_j λ_j · #Hom(H_j, g) · #Hom(H_j, A)`. Test graphs `A`
//! are taken in canonical order until the rows `#Hom(H_j, A)` have full rank,
//! then the system is solved exactly.

use super::{assert_integral, QuantumError, QuantumGraph};
use crate::counting::{count_maps_with, exists_hom, CountError, MapKind};
use crate::generators::all_graphs;
use crate::graph::{tensor_product, Graph};
use crate::Limits;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Clone, Debug)]
pub struct Extraction {
    /// `(H, #Hom(H, g))` in the support order of the quantum graph.
    pub values: Vec<(Graph, BigUint)>,
    pub test_graphs: Vec<Graph>,
    pub queries: usize,
    pub max_query_vertices: usize,
    /// Query targets confirmed to map into the constraint graph.
    pub colorable_queries: usize,
}

impl Extraction {
    pub fn value(&self, h: &Graph) -> Option<&BigUint> {
        self.values.iter().find(|(c, _)| crate::graph::is_isomorphic(c, h)).map(|(_, v)| v)
    }
}

pub fn extract_constituents<O>(
    q: &QuantumGraph,
    g: &Graph,
    oracle: O,
    f_constraint: Option<&Graph>,
) -> Result<Extraction, QuantumError>
where
    O: FnMut(&Graph) -> Result<BigRational, CountError>,
{
    extract_constituents_with(q, g, oracle, f_constraint, &Limits::default())
}

pub fn extract_constituents_with<O>(
    q: &QuantumGraph,
    g: &Graph,
    mut oracle: O,
    f_constraint: Option<&Graph>,
    limits: &Limits,
) -> Result<Extraction, QuantumError>
where
    O: FnMut(&Graph) -> Result<BigRational, CountError>,
{
    if let Some(f) = f_constraint {
        if !exists_hom(g, f) {
            return Err(QuantumError::TargetNotColorable);
        }
    }
    let terms: Vec<(&Graph, &BigRational)> = q.terms().collect();
    let m = terms.len();
    let mut echelon = Echelon::default();
    let mut chosen: Vec<(Graph, Vec<BigRational>)> = Vec::new();
    'sizes: for n in 1..=limits.test_graph_vertices {
        for a in all_graphs(n) {
            if chosen.len() == m {
                break 'sizes;
            }
            let row = terms
                .iter()
                .map(|(h, _)| Ok(int(count_maps_with(MapKind::Hom, h, a, None, limits)?)))
                .collect::<Result<Vec<_>, CountError>>()?;
            if echelon.insert(&row) {
                chosen.push((a.clone(), row));
            }
        }
    }
    if chosen.len() < m {
        return Err(QuantumError::RankDeficiencyTimeout {
            vertices: limits.test_graph_vertices,
            rank: chosen.len(),
            needed: m,
        });
    }
    let mut rhs = Vec::with_capacity(m);
    let mut max_query_vertices = 0;
    let mut colorable_queries = 0;
    for (a, _) in &chosen {
        let target = tensor_product(g, a);
        max_query_vertices = max_query_vertices.max(target.vertex_count());
        if let Some(f) = f_constraint {
            assert!(exists_hom(&target, f), "product of a colorable target lost colorability");
            colorable_queries += 1;
        }
        rhs.push(oracle(&target)?);
    }
    let matrix: Vec<Vec<BigRational>> = chosen.iter().map(|(_, r)| r.clone()).collect();
    let x = solve(matrix, rhs);
    let values = terms
        .iter()
        .zip(x)
        .map(|((h, c), xj)| Ok(((*h).clone(), assert_integral(&(xj / *c))?)))
        .collect::<Result<Vec<_>, QuantumError>>()?;
    Ok(Extraction {
        values,
        test_graphs: chosen.into_iter().map(|(a, _)| a).collect(),
        queries: m,
        max_query_vertices,
        colorable_queries,
    })
}

fn int(n: BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Row-reduced basis used to test whether a new row raises the rank.
#[derive(Default)]
struct Echelon {
    rows: Vec<(usize, Vec<BigRational>)>,
}

impl Echelon {
    fn insert(&mut self, row: &[BigRational]) -> bool {
        let mut r = row.to_vec();
        for (p, b) in &self.rows {
            if !r[*p].is_zero() {
                let factor = r[*p].clone();
                for (x, y) in r.iter_mut().zip(b) {
                    *x -= &factor * y;
                }
            }
        }
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = BigRational::one() / &r[p];
        for x in r.iter_mut() {
            *x *= &inv;
        }
        for (_, b) in self.rows.iter_mut() {
            if !b[p].is_zero() {
                let factor = b[p].clone();
                for (x, y) in b.iter_mut().zip(&r) {
                    *x -= &factor * y;
                }
            }
        }
        self.rows.push((p, r));
        true
    }
}

/// Gauss-Jordan on a non-singular square system.
fn solve(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Vec<BigRational> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("system is non-singular");
        a.swap(col, piv);
        b.swap(col, piv);
        let inv = BigRational::one() / &a[col][col];
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        b[col] *= &inv;
        let pivot = a[col].clone();
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for (x, p) in a[r].iter_mut().zip(&pivot) {
                    *x -= &factor * p;
                }
                let d = &factor * &b[col];
                b[r] -= d;
            }
        }
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::count_homs;
    use crate::graph::named::*;
    use crate::quantum::evaluate_quantum;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn recovers_each_constituent() {
        let q = QuantumGraph::from_terms([(r(2), &path(1)), (r(3), &path(2)), (r(-1), &complete(3))]);
        let g = petersen();
        let ex = extract_constituents(&q, &g, |t| evaluate_quantum(&q, t, count_homs), None).unwrap();
        for h in [path(1), path(2), complete(3)] {
            assert_eq!(ex.value(&h).unwrap(), &count_homs(&h, &g).unwrap());
        }
    }

    #[test]
    fn single_vertex_needs_one_query() {
        let q = QuantumGraph::single(&complete(1));
        let g = cycle(7);
        let ex = extract_constituents(&q, &g, |t| evaluate_quantum(&q, t, count_homs), None).unwrap();
        assert_eq!(ex.queries, 1);
        assert_eq!(ex.values[0].1, BigUint::from(7u32));
    }

    #[test]
    fn constrained_queries_stay_bipartite() {
        let q = QuantumGraph::from_terms([(r(1), &path(1)), (r(1), &path(3))]);
        let g = cycle(6);
        let ex = extract_constituents(
            &q,
            &g,
            |t| {
                assert!(crate::graph::bipartition(t).is_some());
                evaluate_quantum(&q, t, count_homs)
            },
            Some(&complete(2)),
        )
        .unwrap();
        assert_eq!(ex.colorable_queries, 2);
        assert!(matches!(
            extract_constituents(&q, &cycle(5), |_| Ok(r(0)), Some(&complete(2))),
            Err(QuantumError::TargetNotColorable)
        ));
    }
}
