mod common;

use common::graph;
use homcount::counting::{
    automorphism_count, colorful_incl_excl_with, count_homs_td, count_maps_with, exists_hom, tree_decomposition,
    MapKind,
};
use homcount::generators::bits_from_str;
use homcount::graph::named::complete;
use homcount::graph::{components, induced_subgraph, is_isomorphic, tensor_product};
use homcount::linegraph::line_graph;
use homcount::reductions::{
    brute_force_oracle, check_certificate, clique_to_cpgrid, crown, crown_grid, no_hom_certificate,
    universality_decode, universality_encode, Certification, Family, Hints, InstanceSource, ReductionError, TensorToy,
    UniversalityInstance,
};
use homcount::{oracle, Graph, Limits};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

/// `G_x = H_x × K_m` with `m` the member's color count, `κ = 0`, `g(x) = 1/#Aut(H_x)`.
struct Squared {
    family: Family,
}

impl Squared {
    fn index(&self, x: &[bool]) -> usize {
        let evens = self.family.even_indices();
        evens[x.iter().filter(|&&b| b).count() % evens.len()]
    }
}

impl InstanceSource for Squared {
    fn family(&self) -> &Family {
        &self.family
    }

    fn kappa(&self, _: &[bool]) -> usize {
        0
    }

    fn normalizer(&self, x: &[bool]) -> Result<BigRational, ReductionError> {
        let aut = self.family.automorphisms(self.index(x))?;
        Ok(BigRational::new(BigInt::one(), BigInt::from(aut)))
    }

    fn instance(&self, x: &[bool]) -> Result<UniversalityInstance, ReductionError> {
        let n = self.index(x);
        let h = self.family.graph(n)?.clone();
        let m = self.family.color_count(n)?;
        let target = tensor_product(&h, &complete(m));
        Ok(UniversalityInstance {
            x: x.to_vec(),
            kappa: 0,
            pattern_index: n,
            target_coloring: (0..target.vertex_count()).map(|v| v / m).collect(),
            pattern_even: h,
            target,
            normalizer: self.normalizer(x)?,
        })
    }
}

fn homs(h: &Graph, g: &Graph) -> BigUint {
    let limits = Limits::default().with_pattern_budget(h.vertex_count());
    count_maps_with(MapKind::Hom, h, g, None, &limits).unwrap()
}

/// `#Hom(h, g)` as the product over the components of `h`.
fn homs_by_components(h: &Graph, g: &Graph) -> BigUint {
    components(h).iter().map(|c| homs(&induced_subgraph(h, c), g)).product()
}

fn fixtures() -> Vec<Vec<bool>> {
    ["0", "01", "011", "0010", "10"].iter().map(|s| bits_from_str(s).unwrap()).collect()
}

#[test]
fn antichain_members_are_pairwise_incomparable() {
    let f = Family::antichain();
    for a in f.indices() {
        for b in f.indices() {
            if a == b {
                continue;
            }
            let (ga, gb) = (f.graph(a).unwrap(), f.graph(b).unwrap());
            assert!(!exists_hom(ga, gb), "{a} → {b}");
            if let Certification::Proven(c) = no_hom_certificate(ga, gb, &Hints::default()) {
                assert!(check_certificate(&c, ga, gb));
            }
        }
    }
}

#[test]
fn encoded_count_factors_through_the_companion() {
    let src = Squared { family: Family::antichain() };
    let companion_aut = automorphism_count(src.family.graph(3).unwrap()).unwrap();
    for x in fixtures() {
        let inst = src.instance(&x).unwrap();
        let enc = universality_encode(&inst, &src.family).unwrap();
        let want = homs(&inst.pattern_even, &inst.target) * &companion_aut;
        assert_eq!(homs_by_components(&enc.h_hat, &enc.g_hat), want);
        let d = universality_decode(&enc.h_hat, &enc.g_hat, &src, None).unwrap();
        assert_eq!(d.x, x);
    }
}

#[test]
fn cross_pairs_with_different_patterns_have_no_homs() {
    let src = Squared { family: Family::antichain() };
    let encoded: Vec<_> = fixtures()
        .into_iter()
        .map(|x| {
            let inst = src.instance(&x).unwrap();
            let enc = universality_encode(&inst, &src.family).unwrap();
            (inst.pattern_index, enc)
        })
        .collect();
    let mut pairs = 0;
    for (i, (p, a)) in encoded.iter().enumerate() {
        for (j, (q, b)) in encoded.iter().enumerate() {
            if i != j && p != q {
                assert!(homs_by_components(&a.h_hat, &b.g_hat).is_zero());
                pairs += 1;
            }
        }
    }
    assert!(pairs > 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn toy_decoding_recovers_the_string(x in prop::collection::vec(any::<bool>(), 1..10)) {
        prop_assume!(x.contains(&false));
        let src = TensorToy::new(Family::toy());
        let inst = src.instance(&x).unwrap();
        let enc = universality_encode(&inst, &src.family).unwrap();
        let d = universality_decode(&enc.h_hat, &enc.g_hat, &src, None).unwrap();
        prop_assert_eq!(d.x, x);
        prop_assert_eq!(d.normalizer, inst.normalizer);
    }

    #[test]
    fn crown_preserves_the_color_prescribed_count(g in graph(2, 6)) {
        let inst = clique_to_cpgrid(&g, 2).unwrap();
        let limits = Limits { subset_budget: 8, ..Limits::default() };
        let cp = count_maps_with(MapKind::CpHom, inst.coloring.pattern(), &inst.graph, Some(&inst.coloring), &limits).unwrap();
        prop_assert_eq!(&cp, &BigUint::from(2 * g.edge_count()));
        let out = crown(&inst).unwrap();
        let pattern = crown_grid(2, false).unwrap().graph;
        let td = tree_decomposition(&pattern);
        let colorful = colorful_incl_excl_with(
            &pattern, &out.crown, &out.coloring_hat, |t| count_homs_td(&pattern, &td, t), &limits, None,
        ).unwrap();
        if g.vertex_count() <= 3 {
            let direct = colorful_incl_excl_with(
                &pattern, &out.crown, &out.coloring_hat, |t| brute_force_oracle(&pattern, t), &limits, None,
            ).unwrap();
            prop_assert_eq!(&direct, &colorful);
        }
        prop_assert_eq!(colorful, automorphism_count(&pattern).unwrap() * cp);
    }

    #[test]
    fn crown_witnesses_are_roots(g in graph(2, 5), k in 2usize..=3) {
        let inst = clique_to_cpgrid(&g, k).unwrap();
        let out = crown(&inst).unwrap();
        let w = out.witness();
        prop_assert!(w.is_bipartite());
        prop_assert!(w.verify(&out.crown));
        if out.crown.vertex_count() <= 40 {
            prop_assert!(is_isomorphic(&line_graph(&out.bipartite_witness).graph, &out.crown));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn certificates_are_sound(h in graph(1, 6), g in graph(1, 7)) {
        if let Certification::Proven(c) = no_hom_certificate(&h, &g, &Hints::default()) {
            prop_assert!(!oracle::hom_exists(&h, &g), "{} fired on a pair with homs", c.summary());
            prop_assert!(check_certificate(&c, &h, &g));
        }
    }
}
