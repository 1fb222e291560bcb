mod common;

use common::{bipartite, graph};
use homcount::counting::{count_patterns, PatternKind};
use homcount::generators::all_graphs;
use homcount::graph::named::complete;
use homcount::graph::{bipartition, induced_subgraph};
use homcount::linegraph::{decide_hom_to_line, krausz_partition, line_graph, root_graph};
use homcount::{oracle, Graph};
use num_traits::Zero;
use proptest::prelude::*;

/// Bipartite roots without isolated vertices and with at most five edges.
fn small_bipartite_roots() -> Vec<&'static Graph> {
    (2..=6)
        .flat_map(all_graphs)
        .filter(|f| f.edge_count() >= 1 && f.edge_count() <= 5)
        .filter(|f| (0..f.vertex_count()).all(|v| f.degree(v) > 0))
        .filter(|f| bipartition(f).is_some())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn induced_line_copies_are_root_copies(g in bipartite(4)) {
        let l = line_graph(&g).graph;
        for f in small_bipartite_roots() {
            let h = line_graph(f).graph;
            let ind = count_patterns(PatternKind::IndSub, &h, &l).unwrap();
            prop_assert_eq!(ind, oracle::sub_count(f, &g));
        }
        let octahedron = line_graph(&complete(4)).graph;
        prop_assert!(count_patterns(PatternKind::IndSub, &octahedron, &l).unwrap().is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn decision_matches_brute_force(h in graph(1, 5), root in graph(2, 8)) {
        let l = line_graph(&root).graph;
        prop_assume!(l.vertex_count() <= 14);
        prop_assert_eq!(decide_hom_to_line(&h, &l).unwrap(), oracle::hom_exists(&h, &l));
    }

    #[test]
    fn krausz_partitions_are_valid(root in graph(1, 8)) {
        let l = line_graph(&root).graph;
        let k = krausz_partition(&l).expect("line graphs have a Krausz partition");
        prop_assert!(k.validate(&l));
    }

    #[test]
    fn line_graphs_are_closed_under_induced_subgraphs(root in graph(2, 7), masks in prop::collection::vec(any::<u32>(), 20)) {
        let l = line_graph(&root).graph;
        for m in masks {
            let keep: Vec<usize> = (0..l.vertex_count()).filter(|&v| m >> (v % 32) & 1 == 1).collect();
            let sub = induced_subgraph(&l, &keep);
            let w = root_graph(&sub);
            prop_assert!(w.is_ok(), "induced subgraph on {:?} has no root", keep);
            prop_assert!(w.unwrap().verify(&sub));
        }
    }
}
