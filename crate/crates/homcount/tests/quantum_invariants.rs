mod common;

use common::graph;
use homcount::counting::count_homs;
use homcount::generators::all_graphs;
use homcount::graph::{canonical_form, CanonicalForm};
use homcount::partition::partitions;
use homcount::quantum::{evaluate_quantum, extract_constituents, sub_to_hom_quantum, QuantumGraph};
use homcount::{oracle, Graph};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use std::collections::BTreeSet;

/// Loop-free quotients of `h`, built edge by edge from every partition.
fn spasm_by_hand(h: &Graph) -> BTreeSet<CanonicalForm> {
    let mut out = BTreeSet::new();
    for rho in partitions(h.vertex_count()) {
        let block = rho.block_of();
        if h.edges().any(|(u, v)| block[u] == block[v]) {
            continue;
        }
        let q = Graph::from_edges(rho.block_count(), h.edges().map(|(u, v)| (block[u], block[v]))).unwrap();
        out.insert(canonical_form(&q));
    }
    out
}

#[test]
fn sub_expansion_is_supported_on_the_spasm() {
    for h in (1..=5).flat_map(all_graphs) {
        let q = sub_to_hom_quantum(h).unwrap();
        let support: BTreeSet<CanonicalForm> = q.support().map(canonical_form).collect();
        assert_eq!(support, spasm_by_hand(h));
    }
}

fn pool() -> Vec<&'static Graph> {
    (1..=3).flat_map(all_graphs).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn extraction_inverts_evaluation(
        picks in prop::collection::btree_set(0usize..7, 1..=3),
        coeffs in prop::collection::vec(prop_oneof![-4i64..=-1, 1i64..=4], 3),
        g in graph(1, 6),
    ) {
        let pool = pool();
        let q = QuantumGraph::from_terms(
            picks.iter().zip(&coeffs).map(|(&i, &c)| (BigRational::from_integer(BigInt::from(c)), pool[i])),
        );
        let ex = extract_constituents(&q, &g, |t| evaluate_quantum(&q, t, count_homs), None).unwrap();
        for &i in &picks {
            prop_assert_eq!(ex.value(pool[i]), Some(&oracle::hom_count(pool[i], &g)));
        }
    }

    #[test]
    fn sub_counts_through_homs(h in graph(1, 4), g in graph(1, 6)) {
        let q = sub_to_hom_quantum(&h).unwrap();
        let v = evaluate_quantum(&q, &g, |a, b| Ok(oracle::hom_count(a, b))).unwrap();
        prop_assert_eq!(v, BigRational::from_integer(BigInt::from(oracle::sub_count(&h, &g))));
    }
}
