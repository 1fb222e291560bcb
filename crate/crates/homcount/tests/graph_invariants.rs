mod common;

use common::{from_bits, graph};
use homcount::counting::{exists_hom, for_each_hom};
use homcount::generators::{all_graphs, binomial, decode_string, encode_string, kneser, KneserParams};
use homcount::graph::named::complete;
use homcount::graph::{canonical_form, chromatic_number, is_homomorphism, odd_girth, quotient};
use homcount::oracle;
use homcount::partition::SetPartition;
use proptest::prelude::*;
use std::collections::HashMap;

fn og(g: &homcount::Graph) -> usize {
    odd_girth(g).unwrap_or(usize::MAX)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn odd_girth_none_iff_bipartite(g in graph(1, 10)) {
        prop_assert_eq!(odd_girth(&g).is_none(), oracle::is_bipartite(&g));
    }

    #[test]
    fn homs_respect_odd_girth_and_chromatic_number(h in graph(1, 6), g in graph(1, 6)) {
        if oracle::hom_exists(&h, &g) {
            prop_assert!(og(&h) >= og(&g));
            let ch = chromatic_number(&h, None).unwrap();
            let cg = chromatic_number(&g, None).unwrap();
            prop_assert!(ch.value <= cg.value);
        }
    }

    #[test]
    fn quotients_compose(
        g in graph(1, 6),
        rgs in prop::collection::vec(0usize..6, 6),
        outer in prop::collection::vec(0usize..6, 6),
    ) {
        let n = g.vertex_count();
        let rho = SetPartition::from_rgs(&rgs[..n].iter().map(|&b| b % n).collect::<Vec<_>>());
        let k = rho.block_count();
        let sigma = SetPartition::from_rgs(&outer[..k].iter().map(|&b| b % k).collect::<Vec<_>>());
        let direct = quotient(&g, &rho.compose(&sigma));
        let stepwise = quotient(&g, &rho).and_then(|q| quotient(&q, &sigma));
        match (direct, stepwise) {
            (Ok(a), Ok(b)) => prop_assert_eq!(canonical_form(&a), canonical_form(&b)),
            (Err(_), Err(_)) => {}
            (a, b) => prop_assert!(false, "one side failed: {:?} / {:?}", a.is_ok(), b.is_ok()),
        }
    }

    #[test]
    fn homomorphisms_compose(h in graph(1, 5), g in graph(1, 6), f in graph(1, 4)) {
        let mut first = Vec::new();
        for_each_hom(&h, &g, &mut |m| { first.push(m.to_vec()); first.len() < 8 });
        let mut second = Vec::new();
        for_each_hom(&g, &f, &mut |m| { second.push(m.to_vec()); second.len() < 8 });
        for a in &first {
            prop_assert!(is_homomorphism(&h, &g, a));
            for c in &second {
                let composed: Vec<usize> = a.iter().map(|&v| c[v]).collect();
                prop_assert!(is_homomorphism(&h, &f, &composed));
            }
        }
    }

    #[test]
    fn string_encoding_roundtrips(x in prop::collection::vec(any::<bool>(), 1..=64)) {
        prop_assert_eq!(decode_string(&encode_string(&x)).unwrap(), x);
    }
}

#[test]
fn string_encoding_roundtrips_on_1000_strings() {
    use rand::Rng;
    let mut r = oracle::rng(7);
    for _ in 0..1000 {
        let len = r.gen_range(1..=64);
        let x: Vec<bool> = (0..len).map(|_| r.gen_bool(0.5)).collect();
        assert_eq!(decode_string(&encode_string(&x)).unwrap(), x);
    }
}

#[test]
fn canonical_form_is_a_congruence() {
    for n in 1..=5 {
        let pairs = n * (n - 1) / 2;
        let mut classes: HashMap<_, homcount::Graph> = HashMap::new();
        for mask in 0u32..1 << pairs {
            let bits: Vec<bool> = (0..pairs).map(|i| mask >> i & 1 == 1).collect();
            let g = from_bits(n, &bits);
            let form = canonical_form(&g);
            match classes.get(&form) {
                Some(rep) => assert!(oracle::isomorphic(rep, &g)),
                None => {
                    classes.insert(form, g);
                }
            }
        }
        let reps: Vec<&homcount::Graph> = classes.values().collect();
        for (i, a) in reps.iter().enumerate() {
            for b in &reps[i + 1..] {
                assert!(!oracle::isomorphic(a, b));
            }
        }
        assert_eq!(classes.len(), all_graphs(n).len());
    }
}

#[test]
fn family_members_have_the_binomial_shape() {
    for n in [3, 4] {
        let p = KneserParams::family(n).unwrap();
        let k = kneser(p).unwrap();
        assert_eq!(k.graph.vertex_count() as u128, binomial(p.r, p.s));
        let deg = binomial(p.r - p.s, p.s) as usize;
        assert!((0..k.graph.vertex_count()).all(|v| k.graph.degree(v) == deg));
        let colors = k.coloring.iter().max().unwrap() + 1;
        assert_eq!(colors, n);
    }
}

#[test]
fn witness_colorings_are_proper() {
    for (r, s) in [(5, 2), (6, 2), (7, 2), (7, 3), (8, 3), (9, 4), (4, 1), (6, 1)] {
        let k = kneser(KneserParams::new(r, s)).unwrap();
        assert!(k.graph.edges().all(|(u, v)| k.coloring[u] != k.coloring[v]));
        let mut used = k.coloring.clone();
        used.sort_unstable();
        used.dedup();
        assert_eq!(used.len(), r - 2 * s + 2, "K({r},{s})");
    }
}

#[test]
fn kneser_with_singletons_is_complete() {
    for r in 1..=6 {
        let k = kneser(KneserParams::new(r, 1)).unwrap();
        assert!(oracle::isomorphic(&k.graph, &complete(r)));
    }
}

#[test]
fn petersen_has_no_triangle_image() {
    let p = kneser(KneserParams::new(5, 2)).unwrap().graph;
    assert!(!exists_hom(&complete(3), &p));
    assert!(exists_hom(&p, &complete(3)));
}
