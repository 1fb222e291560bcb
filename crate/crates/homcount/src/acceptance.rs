//! The acceptance checks, runnable from the test suite and from `homcount verify`.
//!
//! Each check compares production code against [`crate::oracle`] or re-derives
//! its facts from scratch. Time limits and fixture sizes live in [`pinned`].

use crate::counting::{
    automorphism_count, count_homs_td, count_maps_with, for_each_hom, tree_decomposition, CountError, MapKind,
};
use crate::generators::{all_graphs, binomial, bits_to_string, kneser, Kneser, KneserParams};
use crate::graph::named::{complete, cycle, path, star};
use crate::graph::probe::validate_coloring;
use crate::graph::{
    bipartition, disjoint_union, is_connected, is_isomorphic, odd_girth, odd_girth_from, tensor_product, Graph,
};
use crate::linegraph::{decide_hom_to_line, line_graph, line_pattern_quantum, root_graph};
use crate::oracle::{self, rng};
use crate::partition::{partition_mobius, partitions};
use crate::quantum::{
    basis_transform, evaluate_quantum, extract_constituents, restrict_colorable, sub_to_hom_quantum, QuantumGraph,
    Species,
};
use crate::reductions::{
    check_certificate, clique_to_cpgrid, crown, crown_grid, factorial, koenig_direct, koenig_hardness_pipeline,
    no_hom_certificate, universality_assemble, universality_decode, universality_encode, Certification, Family,
    GridColoredInstance, Hints, InstanceSource, ReductionError, TensorToy,
};
use crate::{Exec, Limits};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::HashMap;
use std::fmt::Display;
use std::ops::{Range, RangeInclusive};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

pub mod pinned {
    use std::time::Duration;

    pub const SMALL_KNESER: Duration = Duration::from_secs(1);
    pub const BIG_KNESER_BUILD: Duration = Duration::from_secs(60);
    pub const BIG_KNESER_ODD_GIRTH: Duration = Duration::from_secs(30);
    pub const TD_TOTAL: Duration = Duration::from_secs(60);
    pub const LINE_IDENTITY_TOTAL: Duration = Duration::from_secs(120);
    pub const CLIQUE_CHAIN: Duration = Duration::from_secs(120);

    pub const TD_PAIRS: usize = 200;
    pub const SUB_TARGETS: usize = 30;
    pub const LINE_TARGETS: usize = 100;
    pub const WHITNEY_GRAPHS: usize = 100;
    pub const TOY_FIXTURES: usize = 50;
    pub const SOUNDNESS_PAIRS: usize = 500;
    pub const EXTRACTION_TARGETS: usize = 50;
    pub const LINE_DECISIONS: usize = 100;
    /// Crowns up to this size are also compared with `L(witness)` by canonical form.
    pub const CANONICAL_CROWN_LIMIT: usize = 40;
    /// `|V(crown_grid(3))|`, the number of colors summed over in the `k = 3` chain.
    pub const CHAIN_SUBSET_BUDGET: usize = 26;
}

pub const CRITERIA: [(u8, &str); 13] = [
    (1, "Kneser facts"),
    (2, "K(18,8) scale"),
    (3, "treewidth DP vs brute force"),
    (4, "basis changes and Möbius"),
    (5, "subgraphs via homs"),
    (6, "line-pattern identity"),
    (7, "Whitney roundtrip"),
    (8, "clique pipeline"),
    (9, "crown structure"),
    (10, "universality roundtrip"),
    (11, "antichain certificates"),
    (12, "constituent extraction"),
    (13, "line-target decision"),
];

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl Outcome {
    pub fn line(&self) -> String {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        format!("{tag} {:>2}  {} [{:.2?}]  {}", self.id, self.title, self.elapsed, self.detail)
    }
}

#[derive(Clone, Debug)]
pub struct Settings {
    pub seed: u64,
    pub exec: Exec,
    /// Wall-clock allowance for the inclusion–exclusion chain of criterion 8.
    pub chain_deadline: Duration,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { seed: 0x5eed, exec: Exec::default(), chain_deadline: pinned::CLIQUE_CHAIN }
    }
}

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err(format!($($arg)+));
        }
    };
}

fn fail<E: Display>(e: E) -> String {
    e.to_string()
}

fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

fn uint(n: BigUint) -> BigRational {
    int(BigInt::from(n))
}

fn brute(h: &Graph, g: &Graph) -> Result<BigUint, CountError> {
    Ok(oracle::hom_count(h, g))
}

fn gnp(r: &mut ChaCha8Rng, n: RangeInclusive<usize>, p: Range<f64>) -> Graph {
    let (n, p) = (r.gen_range(n), r.gen_range(p));
    oracle::random_graph(r, n, p)
}

fn connected_bipartite(r: &mut ChaCha8Rng, n: RangeInclusive<usize>, p: Range<f64>) -> Graph {
    let (n, p) = (r.gen_range(n), r.gen_range(p));
    oracle::random_connected_bipartite(r, n, p)
}

fn distinct(c: &[usize]) -> usize {
    let mut v = c.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

fn big_kneser() -> Result<&'static Kneser, String> {
    static CELL: OnceLock<Result<Kneser, String>> = OnceLock::new();
    CELL.get_or_init(|| kneser(KneserParams::family(4).map_err(fail)?).map_err(fail)).as_ref().map_err(Clone::clone)
}

pub fn criterion(id: u8, settings: &Settings) -> Outcome {
    let title = CRITERIA.iter().find(|c| c.0 == id).map_or("unknown criterion", |c| c.1);
    let start = Instant::now();
    let result = match id {
        1 => kneser_facts(),
        2 => kneser_scale(),
        3 => td_equivalence(settings),
        4 => basis_roundtrips(settings),
        5 => sub_via_hom(settings),
        6 => line_identity(settings),
        7 => whitney(settings),
        8 => clique_pipeline(settings),
        9 => crown_structure(),
        10 => universality_roundtrip(),
        11 => antichain_certificates(settings),
        12 => extraction(settings),
        13 => line_decision(settings),
        _ => Err(format!("no criterion {id}")),
    };
    let (passed, detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Outcome { id, title, passed, detail, elapsed: start.elapsed() }
}

pub fn run_all(settings: &Settings) -> Vec<Outcome> {
    CRITERIA.iter().map(|&(id, _)| criterion(id, settings)).collect()
}

fn kneser_facts() -> Check {
    let start = Instant::now();
    let p = kneser(KneserParams::new(5, 2)).map_err(fail)?;
    let g = &p.graph;
    ensure!(
        g.vertex_count() == 10 && g.edge_count() == 15,
        "K(5,2) has {} vertices, {} edges",
        g.vertex_count(),
        g.edge_count()
    );
    ensure!(odd_girth(g) == Some(5), "K(5,2) has odd girth {:?}", odd_girth(g));
    ensure!(is_connected(g), "K(5,2) is disconnected");
    let q = kneser(KneserParams::new(7, 3)).map_err(fail)?;
    let g = &q.graph;
    ensure!(g.vertex_count() == 35, "K(7,3) has {} vertices", g.vertex_count());
    ensure!(odd_girth(g) == Some(7), "K(7,3) has odd girth {:?}", odd_girth(g));
    validate_coloring(g, &q.coloring).map_err(fail)?;
    ensure!(distinct(&q.coloring) == 3, "K(7,3) witness uses {} colors", distinct(&q.coloring));
    ensure!(bipartition(g).is_none(), "K(7,3) is bipartite");
    let t = start.elapsed();
    ensure!(t < pinned::SMALL_KNESER, "took {t:.2?}");
    Ok("K(5,2): 10 vertices, 15 edges, odd girth 5, connected; K(7,3): 35 vertices, odd girth 7, χ = 3".into())
}

fn kneser_scale() -> Check {
    let start = Instant::now();
    let k = kneser(KneserParams::family(4).map_err(fail)?).map_err(fail)?;
    let build = start.elapsed();
    let g = &k.graph;
    ensure!((k.params.r, k.params.s) == (18, 8), "K(4) = K({}, {})", k.params.r, k.params.s);
    ensure!(binomial(18, 8) == 43758 && binomial(10, 8) == 45, "binomial table is off");
    ensure!(g.vertex_count() == 43758, "{} vertices", g.vertex_count());
    ensure!(g.edge_count() == 984555, "{} edges", g.edge_count());
    ensure!(build < pinned::BIG_KNESER_BUILD, "construction took {build:.2?}");
    let start = Instant::now();
    let og = odd_girth_from(g, 0);
    let t = start.elapsed();
    ensure!(og == Some(9), "single-source odd girth {og:?}");
    ensure!(t < pinned::BIG_KNESER_ODD_GIRTH, "odd girth took {t:.2?}");
    Ok(format!("43758 vertices, 984555 edges in {build:.2?}; odd girth 9 from vertex 0 in {t:.2?}"))
}

fn td_equivalence(s: &Settings) -> Check {
    let start = Instant::now();
    let mut r = rng(s.seed);
    let mut nonzero = 0;
    for i in 0..pinned::TD_PAIRS {
        let h = gnp(&mut r, 1..=6, 0.2..0.8);
        let g = gnp(&mut r, 1..=8, 0.2..0.9);
        let td = tree_decomposition(&h);
        td.validate(&h).map_err(fail)?;
        let dp = count_homs_td(&h, &td, &g).map_err(fail)?;
        let bf = oracle::hom_count(&h, &g);
        ensure!(dp == bf, "pair {i}: DP {dp}, brute force {bf}");
        nonzero += usize::from(!bf.is_zero());
    }
    let t = start.elapsed();
    ensure!(t < pinned::TD_TOTAL, "took {t:.2?}");
    Ok(format!("{} pairs equal ({nonzero} with homs)", pinned::TD_PAIRS))
}

fn roundtrip(q: &QuantumGraph, a: Species, b: Species) -> Result<bool, String> {
    let there = basis_transform(q, a, b).map_err(fail)?;
    Ok(basis_transform(&there, b, a).map_err(fail)? == *q)
}

fn basis_roundtrips(s: &Settings) -> Check {
    use Species::*;
    let graphs: Vec<&Graph> = (1..=4).flat_map(all_graphs).collect();
    let mut r = rng(s.seed);
    let mut mixed = QuantumGraph::new();
    for h in &graphs {
        let num = loop {
            let c: i64 = r.gen_range(-5..=5);
            if c != 0 {
                break c;
            }
        };
        mixed.add_term(h, BigRational::new(num.into(), r.gen_range(1i64..=3).into()));
    }
    let targets: Vec<Graph> = (0..5).map(|_| gnp(&mut r, 2..=5, 0.5..0.51)).collect();
    for h in &graphs {
        let q = QuantumGraph::single(h);
        for (a, b) in [(Hom, Emb), (Emb, Hom), (Emb, StrEmb), (StrEmb, Emb)] {
            ensure!(roundtrip(&q, a, b)?, "{a:?} → {b:?} → {a:?} moved a single {}-vertex term", h.vertex_count());
        }
        let in_hom = basis_transform(&q, Emb, Hom).map_err(fail)?;
        let in_str = basis_transform(&q, Emb, StrEmb).map_err(fail)?;
        for t in &targets {
            let want = uint(oracle::emb_count(h, t));
            let via_hom = evaluate_quantum(&in_hom, t, brute).map_err(fail)?;
            let via_str = evaluate_quantum(&in_str, t, |x, y| Ok(oracle::strong_emb_count(x, y))).map_err(fail)?;
            ensure!(via_hom == want && via_str == want, "Emb expansion disagrees with enumeration");
        }
    }
    for (a, b) in [(Hom, Emb), (Emb, Hom), (Emb, StrEmb), (StrEmb, Emb)] {
        ensure!(roundtrip(&mixed, a, b)?, "{a:?} → {b:?} → {a:?} moved the mixed combination");
    }
    let mut parts = 0;
    for n in 1..=5 {
        for rho in partitions(n) {
            ensure!(partition_mobius(&rho) == oracle::mobius_recursive(&rho), "μ differs on a partition of {n}");
            parts += 1;
        }
    }
    Ok(format!("{} graphs and one mixed combination round-trip; μ agrees on {parts} partitions", graphs.len()))
}

fn sub_via_hom(s: &Settings) -> Check {
    let p2 = sub_to_hom_quantum(&path(2)).map_err(fail)?;
    let v = evaluate_quantum(&p2, &complete(4), brute).map_err(fail)?;
    let direct = oracle::sub_count(&path(2), &complete(4));
    ensure!(v == int(12) && direct == BigUint::from(12u32), "Sub(P_2, K_4): quantum {v}, enumeration {direct}");
    let mut r = rng(s.seed);
    let targets: Vec<Graph> = (0..pinned::SUB_TARGETS).map(|_| gnp(&mut r, 1..=6, 0.3..0.8)).collect();
    let mut checked = 0;
    for h in (1..=5).flat_map(all_graphs) {
        let q = sub_to_hom_quantum(h).map_err(fail)?;
        for t in &targets {
            let via = evaluate_quantum(&q, t, brute).map_err(fail)?;
            let want = uint(oracle::sub_count(h, t));
            ensure!(via == want, "Sub({h:?}, {t:?}): quantum {via}, enumeration {want}");
            checked += 1;
        }
    }
    Ok(format!("Sub(P_2, K_4) = 12; {checked} pattern/target pairs agree"))
}

fn line_identity(s: &Settings) -> Check {
    let start = Instant::now();
    let mut r = rng(s.seed);
    let patterns = [("P_2", path(2)), ("P_3", path(3)), ("C_4", cycle(4)), ("K_3", complete(3))];
    let quantum: Vec<QuantumGraph> =
        patterns.iter().map(|(_, h)| line_pattern_quantum(h)).collect::<Result<_, _>>().map_err(fail)?;
    for i in 0..pinned::LINE_TARGETS {
        let a = r.gen_range(1..=4);
        let b = r.gen_range(1..=7 - a);
        let g = {
            let p = r.gen_range(0.3..0.9);
            oracle::random_bipartite(&mut r, a, b, p)
        };
        let l = line_graph(&g).graph;
        for ((name, h), q) in patterns.iter().zip(&quantum) {
            let lhs = uint(oracle::hom_count(h, &l));
            let rhs = evaluate_quantum(q, &g, brute).map_err(fail)?;
            ensure!(lhs == rhs, "target {i}, {name}: Hom(H, L(G)) = {lhs}, Hom(Q[H], G) = {rhs}");
        }
    }
    let t = start.elapsed();
    ensure!(t < pinned::LINE_IDENTITY_TOTAL, "took {t:.2?}");
    let sizes: Vec<String> = patterns.iter().zip(&quantum).map(|((n, _), q)| format!("{n}:{}", q.len())).collect();
    Ok(format!("{} bipartite targets, constituents {}", pinned::LINE_TARGETS, sizes.join(" ")))
}

fn whitney(s: &Settings) -> Check {
    let mut r = rng(s.seed);
    for i in 0..pinned::WHITNEY_GRAPHS {
        let g = connected_bipartite(&mut r, 3..=9, 0.1..0.6);
        let l = line_graph(&g).graph;
        let w = root_graph(&l).map_err(|e| format!("graph {i}: {e}"))?;
        ensure!(w.verify(&l), "graph {i}: edge map is not a line-graph isomorphism");
        ensure!(is_isomorphic(&w.root, &g), "graph {i}: root differs");
        if g.vertex_count() <= 8 {
            ensure!(oracle::isomorphic(&w.root, &g), "graph {i}: brute-force isomorphism fails");
        }
    }
    let w = root_graph(&complete(3)).map_err(fail)?;
    ensure!(is_isomorphic(&w.root, &star(3)), "root of K_3 is not K_1,3");
    Ok(format!("{} connected bipartite graphs recovered; root(K_3) = K_1,3", pinned::WHITNEY_GRAPHS))
}

/// `#Hom(h, g)` by enumeration that gives up at `deadline`.
fn hom_count_until(h: &Graph, g: &Graph, deadline: Instant) -> Result<BigUint, CountError> {
    let mut n = 0u128;
    let mut late = false;
    for_each_hom(h, g, &mut |_| {
        n += 1;
        if n.is_multiple_of(65536) && Instant::now() >= deadline {
            late = true;
            return false;
        }
        true
    });
    if late {
        return Err(CountError::Oracle(format!("deadline passed after enumerating {n} homomorphisms of one term")));
    }
    Ok(BigUint::from(n))
}

fn clique_pipeline(s: &Settings) -> Check {
    let limits = Limits::default().with_exec(s.exec);
    let mut parts = Vec::new();
    for (g, name, want) in [(complete(4), "K_4", 4u32), (complete(5), "K_5", 10)] {
        let inst = clique_to_cpgrid(&g, 3).map_err(fail)?;
        let pattern = inst.coloring.pattern().clone();
        let cp = count_maps_with(MapKind::CpHom, &pattern, &inst.graph, Some(&inst.coloring), &limits).map_err(fail)?;
        let cliques = oracle::clique_count(&g, 3);
        ensure!(
            cp == factorial(3) * want && cliques == u64::from(want),
            "{name}: #CpHom = {cp}, clique oracle {cliques}, expected {want} triangles"
        );
        parts.push(format!("{name}: {cp}/3! = {want}"));
    }
    let direct = koenig_direct(&complete(4), 3, &limits).map_err(fail)?;
    parts.push(format!("direct CpHom through the crown ({} vertices): {}", direct.crown_vertices, direct.cliques));
    let chain_limits = Limits { subset_budget: pinned::CHAIN_SUBSET_BUDGET, ..limits };
    let deadline = Instant::now() + s.chain_deadline;
    let oracle = |p: &Graph, t: &Graph| hom_count_until(p, t, deadline);
    let chain = koenig_hardness_pipeline(&complete(4), 3, oracle, &chain_limits, Some(deadline));
    let summary = parts.join("; ");
    match chain {
        Ok(r) if r.cliques == BigUint::from(4u32) => {
            Ok(format!("{summary}; inclusion–exclusion chain on K_4: {} triangles", r.cliques))
        }
        Ok(r) => Err(format!("{summary}; inclusion–exclusion chain on K_4 gave {}", r.cliques)),
        Err(e) => Err(format!(
            "{summary}; inclusion–exclusion chain on K_4 over 2^{} color sets did not finish in {:.0?}: {e}",
            pinned::CHAIN_SUBSET_BUDGET,
            s.chain_deadline
        )),
    }
}

fn crown_structure() -> Check {
    let c2 = crown_grid(2, false).map_err(fail)?.graph;
    ensure!(oracle::isomorphic(&c2, &cycle(8)), "crown_grid(2) is not C_8");
    let mut instances = vec![GridColoredInstance::identity(2), GridColoredInstance::identity(3)];
    for (g, k) in [(complete(4), 2), (cycle(5), 2), (complete(4), 3), (complete(5), 3)] {
        instances.push(clique_to_cpgrid(&g, k).map_err(fail)?);
    }
    let mut canonical = 0;
    for inst in &instances {
        let out = crown(inst).map_err(fail)?;
        let w = out.witness();
        ensure!(w.is_bipartite(), "witness of a {}-vertex crown is not bipartite", out.crown.vertex_count());
        ensure!(w.verify(&out.crown), "witness edge map of a {}-vertex crown is wrong", out.crown.vertex_count());
        if out.crown.vertex_count() <= pinned::CANONICAL_CROWN_LIMIT {
            ensure!(
                is_isomorphic(&line_graph(&out.bipartite_witness).graph, &out.crown),
                "L(witness) is not the crown"
            );
            canonical += 1;
        }
    }
    Ok(format!("crown_grid(2) ≅ C_8; {} witnesses verified, {canonical} by canonical form", instances.len()))
}

fn toy_strings(count: usize) -> Vec<Vec<bool>> {
    (1..=10usize)
        .flat_map(|len| {
            (0u32..1 << len).map(move |m| (0..len).map(|i| m >> (len - 1 - i) & 1 == 1).collect::<Vec<bool>>())
        })
        .filter(|x| x.contains(&false))
        .take(count)
        .collect()
}

fn expect_reject(step: u8, got: Result<crate::reductions::Decoded, crate::reductions::Reject>) -> Result<(), String> {
    match got {
        Err(r) if r.step == step => Ok(()),
        Err(r) => Err(format!("step {step} fixture rejected at step {}: {}", r.step, r.reason)),
        Ok(_) => Err(format!("step {step} fixture was accepted")),
    }
}

fn universality_roundtrip() -> Check {
    let src = TensorToy::new(Family::toy());
    let family = &src.family;
    let mut auts: HashMap<usize, BigUint> = HashMap::new();
    let mut aut = |n: usize| -> Result<BigUint, String> {
        if let Some(a) = auts.get(&n) {
            return Ok(a.clone());
        }
        let a = automorphism_count(family.graph(n).map_err(fail)?).map_err(fail)?;
        auts.insert(n, a.clone());
        Ok(a)
    };
    let mut kappas = [0usize; 3];
    for x in toy_strings(pinned::TOY_FIXTURES) {
        let label = bits_to_string(&x);
        let inst = src.instance(&x).map_err(fail)?;
        let enc = universality_encode(&inst, family).map_err(fail)?;
        let d = universality_decode(&enc.h_hat, &enc.g_hat, &src, None).map_err(|e| format!("{label}: {e}"))?;
        let lead = x.iter().take_while(|&&b| b).count().min(2);
        ensure!(d.x == x, "{label}: decoded x = {}", bits_to_string(&d.x));
        ensure!(d.kappa == lead && d.companion_index == 2 * lead + 3, "{label}: κ = {}", d.kappa);
        ensure!(d.pattern_index == inst.pattern_index, "{label}: pattern index {}", d.pattern_index);
        ensure!(d.normalizer == inst.normalizer, "{label}: normalizer {}", d.normalizer);
        let factor = uint(aut(d.companion_index)? * aut(d.pattern_index)?);
        ensure!(d.factor == factor, "{label}: factor {} but automorphism counts give {factor}", d.factor);
        kappas[d.kappa] += 1;
    }
    ensure!(kappas[0] > 0, "no κ = 0 fixture");
    let k3 = family.graph(3).map_err(fail)?;
    let true_k3 = kneser(KneserParams::family(3).map_err(fail)?).map_err(fail)?.graph;
    ensure!(*k3 == true_k3, "companion at index 3 is not K(3)");

    // Counts: F(x) · factor = #Aut(K(2κ+3)) · #Hom(P, P × K_4) = #Aut(K(2κ+3)) · #Aut(P) · #Hom(P, K_4)
    // for the Petersen graph P, a core.
    for x in ["00", "1100"] {
        let x = crate::generators::bits_from_str(x).unwrap();
        let inst = src.instance(&x).map_err(fail)?;
        let enc = universality_encode(&inst, family).map_err(fail)?;
        let answer = |y: &[bool]| src.answer(y);
        let d = universality_decode(&enc.h_hat, &enc.g_hat, &src, Some(&answer)).map_err(fail)?;
        let colorings = oracle::hom_count(&inst.pattern_even, &complete(4));
        let want = aut(d.companion_index)? * aut(d.pattern_index)? * colorings;
        ensure!(d.count.as_ref() == Some(&want), "{}: count {:?}, expected {want}", bits_to_string(&x), d.count);
    }

    let x = crate::generators::bits_from_str("1001").unwrap();
    let inst = src.instance(&x).map_err(fail)?;
    let enc = universality_encode(&inst, family).map_err(fail)?;
    let companion = family.graph(enc.companion_index).map_err(fail)?;
    let decode = |h: &Graph, g: &Graph| universality_decode(h, g, &src, None);

    expect_reject(1, decode(&inst.pattern_even, &enc.g_hat))?;
    expect_reject(2, decode(&enc.h_hat, &disjoint_union(&[&enc.g_hat, companion]).graph))?;
    let mut other = inst.clone();
    other.kappa = 0;
    let other = universality_assemble(&other, family).map_err(fail)?;
    expect_reject(3, decode(&enc.h_hat, &other.g_hat))?;
    expect_reject(4, decode(&enc.h_hat, &disjoint_union(&[&inst.target, companion]).graph))?;
    expect_reject(5, decode(&other.h_hat, &other.g_hat))?;
    let swapped = disjoint_union(&[family.graph(6).map_err(fail)?, companion]).graph;
    expect_reject(6, decode(&swapped, &enc.g_hat))?;
    let ones = src.instance(&[true; 3]).map_err(fail)?;
    ensure!(universality_encode(&ones, family).is_err(), "encoder accepted a vanishing normalizer");
    let ones = universality_assemble(&ones, family).map_err(fail)?;
    expect_reject(7, decode(&ones.h_hat, &ones.g_hat))?;
    let fractional = |_: &[bool]| Ok(BigRational::new(BigInt::one(), BigInt::from(7)));
    expect_reject(8, universality_decode(&enc.h_hat, &enc.g_hat, &src, Some(&fractional)))?;
    let broken = |_: &[bool]| Err(ReductionError::BadParameter("oracle unavailable".into()));
    expect_reject(8, universality_decode(&enc.h_hat, &enc.g_hat, &src, Some(&broken)))?;

    Ok(format!(
        "{} fixtures (κ = 0/1/2: {}/{}/{}), factors match automorphism counts, steps 1–8 each reject",
        pinned::TOY_FIXTURES,
        kappas[0],
        kappas[1],
        kappas[2]
    ))
}

fn antichain_certificates(s: &Settings) -> Check {
    let k3 = kneser(KneserParams::family(3).map_err(fail)?).map_err(fail)?;
    let k4 = big_kneser()?;
    let up = Hints { g_vertex_transitive: true, ..Hints::default() };
    let cert = match no_hom_certificate(&k3.graph, &k4.graph, &up) {
        Certification::Proven(c) => c,
        Certification::Inconclusive => return Err("K(3) → K(4) inconclusive".into()),
    };
    ensure!(cert.summary() == "OddGirthGap(7 < 9)", "K(3) → K(4): {}", cert.summary());
    ensure!(check_certificate(&cert, &k3.graph, &k4.graph), "K(3) → K(4) certificate does not check");
    let down = Hints { h_chi_lower: Some(4), g_coloring: Some(k3.coloring.clone()), g_vertex_transitive: true };
    let back = match no_hom_certificate(&k4.graph, &k3.graph, &down) {
        Certification::Proven(c) => c,
        Certification::Inconclusive => return Err("K(4) → K(3) inconclusive".into()),
    };
    ensure!(back.summary() == "ChromaticGap(4 > 3)", "K(4) → K(3): {}", back.summary());
    ensure!(check_certificate(&back, &k4.graph, &k3.graph), "K(4) → K(3) certificate does not check");

    let mut r = rng(s.seed);
    let mut fired = 0;
    for i in 0..pinned::SOUNDNESS_PAIRS {
        let h = gnp(&mut r, 1..=6, 0.2..0.9);
        let g = gnp(&mut r, 1..=7, 0.1..0.8);
        if let Certification::Proven(c) = no_hom_certificate(&h, &g, &Hints::default()) {
            ensure!(!oracle::hom_exists(&h, &g), "pair {i}: {} fired but a homomorphism exists", c.summary());
            ensure!(check_certificate(&c, &h, &g), "pair {i}: {} does not check", c.summary());
            fired += 1;
        }
    }
    Ok(format!("{}; {}; sound on {} pairs ({fired} fired)", cert.summary(), back.summary(), pinned::SOUNDNESS_PAIRS))
}

fn extraction(s: &Settings) -> Check {
    let mut r = rng(s.seed);
    let constituents = [path(1), path(2), complete(3)];
    let q =
        QuantumGraph::from_terms([(int(2), &constituents[0]), (int(3), &constituents[1]), (int(-1), &constituents[2])]);
    let answer = |t: &Graph| evaluate_quantum(&q, t, brute);
    let mut queries = 0;
    for i in 0..pinned::EXTRACTION_TARGETS {
        let g = gnp(&mut r, 1..=7, 0.2..0.9);
        let ex = extract_constituents(&q, &g, answer, None).map_err(|e| format!("target {i}: {e}"))?;
        for h in &constituents {
            let want = oracle::hom_count(h, &g);
            ensure!(ex.value(h) == Some(&want), "target {i}: extracted {:?}, expected {want}", ex.value(h));
        }
        queries += ex.queries;
    }
    let k2 = complete(2);
    let restricted = restrict_colorable(&q, &k2).map_err(fail)?;
    ensure!(restricted.len() == 2, "K_2 restriction keeps {} constituents", restricted.len());
    let mut checked_products = 0;
    for i in 0..pinned::EXTRACTION_TARGETS {
        let a = r.gen_range(1..=4);
        let b = r.gen_range(1..=7 - a);
        let g = {
            let p = r.gen_range(0.3..0.9);
            oracle::random_bipartite(&mut r, a, b, p)
        };
        let ex = extract_constituents(&restricted, &g, answer, Some(&k2)).map_err(|e| format!("bipartite {i}: {e}"))?;
        ensure!(ex.colorable_queries == ex.queries, "bipartite {i}: unverified queries");
        for t in &ex.test_graphs {
            let product = tensor_product(&g, t);
            let bip = if product.vertex_count() <= 16 {
                oracle::is_bipartite(&product)
            } else {
                bipartition(&product).is_some()
            };
            ensure!(bip, "bipartite {i}: a queried product is not bipartite");
            checked_products += 1;
        }
        for h in &constituents {
            let want = oracle::hom_count(h, &g);
            let got = ex.value(h).cloned().unwrap_or_default();
            ensure!(got == want, "bipartite {i}: extracted {got}, expected {want}");
        }
    }
    Ok(format!(
        "{} general targets ({queries} queries); {} bipartite targets under F = K_2, {checked_products} products bipartite",
        pinned::EXTRACTION_TARGETS,
        pinned::EXTRACTION_TARGETS
    ))
}

fn line_decision(s: &Settings) -> Check {
    let mut r = rng(s.seed);
    let mut yes = 0;
    for i in 0..pinned::LINE_DECISIONS {
        let h = gnp(&mut r, 1..=5, 0.2..0.9);
        let root = gnp(&mut r, 2..=8, 0.15..0.4);
        let l = line_graph(&root).graph;
        let got = decide_hom_to_line(&h, &l).map_err(fail)?;
        let want = oracle::hom_exists(&h, &l);
        ensure!(got == want, "instance {i}: decided {got}, brute force {want}");
        yes += usize::from(want);
    }
    let l = line_graph(&star(5)).graph;
    let mut fixtures = 0;
    for h in [complete(3), complete(5), cycle(5), path(4), complete(6)] {
        let got = decide_hom_to_line(&h, &l).map_err(fail)?;
        let want = oracle::hom_exists(&h, &l);
        ensure!(got == want, "L(K_1,5) fixture on {} vertices: decided {got}, brute force {want}", h.vertex_count());
        fixtures += 1;
    }
    Ok(format!("{} instances agree ({yes} yes); {fixtures} L(K_1,5) fixtures", pinned::LINE_DECISIONS))
}
