//! Parallel and sequential execution of the same workloads.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use homcount::counting::{colorful_incl_excl_with, count_homs_td, count_maps_with, tree_decomposition, MapKind};
use homcount::generators::{kneser, KneserParams};
use homcount::graph::named::{complete, cycle, petersen};
use homcount::graph::tensor_product;
use homcount::linegraph::{decide_hom_to_line_with, line_graph};
use homcount::quantum::{evaluate_quantum_with, sub_to_hom_quantum};
use homcount::reductions::{clique_to_cpgrid, crown, crown_grid};
use homcount::{Exec, Limits};
use std::hint::black_box;

const MODES: [(&str, Exec); 2] = [("parallel", Exec::Parallel), ("sequential", Exec::Sequential)];

fn backtracking(c: &mut Criterion) {
    let mut group = c.benchmark_group("hom_backtracking");
    let h = cycle(7);
    let g = tensor_product(&petersen(), &complete(3));
    for (name, exec) in MODES {
        let limits = Limits::default().with_exec(exec);
        group.bench_with_input(BenchmarkId::new(name, "C7→P×K3"), &limits, |b, l| {
            b.iter(|| count_maps_with(MapKind::Hom, black_box(&h), black_box(&g), None, l).unwrap())
        });
    }
    group.finish();
}

fn inclusion_exclusion(c: &mut Criterion) {
    let mut group = c.benchmark_group("colorful_incl_excl");
    let inst = clique_to_cpgrid(&cycle(5), 2).unwrap();
    let out = crown(&inst).unwrap();
    let pattern = crown_grid(2, false).unwrap().graph;
    let td = tree_decomposition(&pattern);
    for (name, exec) in MODES {
        let limits = Limits { subset_budget: 8, ..Limits::default().with_exec(exec) };
        group.bench_with_input(BenchmarkId::new(name, "crown(C5)"), &limits, |b, l| {
            b.iter(|| {
                colorful_incl_excl_with(
                    &pattern,
                    &out.crown,
                    &out.coloring_hat,
                    |t| count_homs_td(&pattern, &td, t),
                    l,
                    None,
                )
                .unwrap()
            })
        });
    }
    group.finish();
}

fn quantum_evaluation(c: &mut Criterion) {
    let mut group = c.benchmark_group("quantum_evaluation");
    let q = sub_to_hom_quantum(&cycle(5)).unwrap();
    let g = kneser(KneserParams::new(7, 2)).unwrap().graph;
    for (name, exec) in MODES {
        let limits = Limits::default().with_exec(exec);
        group.bench_with_input(BenchmarkId::new(name, "Sub(C5)→K(7,2)"), &limits, |b, l| {
            b.iter(|| {
                let backend = |p: &homcount::Graph, t: &homcount::Graph| count_homs_td(p, &tree_decomposition(p), t);
                evaluate_quantum_with(&q, black_box(&g), backend, l).unwrap()
            })
        });
    }
    group.finish();
}

fn line_decision(c: &mut Criterion) {
    let mut group = c.benchmark_group("decide_hom_to_line");
    let l = line_graph(&cycle(40)).graph;
    let h = cycle(5);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new(name, "C5→L(C40)"), |b| {
            b.iter(|| decide_hom_to_line_with(black_box(&h), &l, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, backtracking, inclusion_exclusion, quantum_evaluation, line_decision);
criterion_main!(benches);
