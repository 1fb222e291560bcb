//! Subcommand implementations.

use crate::output::{self, Failure, Format, Outcome, Record};
use crate::{
    CertifyArgs, Cli, Command, CountArgs, GenCommand, Kind, Method, QuantumCommand, ReduceCommand, SpeciesArg,
    VerifyArgs,
};
use homcount::acceptance::{self, Settings};
use homcount::counting::{
    colorful_incl_excl_with, count_homs_td, count_maps_with, count_patterns_with, tree_decomposition, CountError,
    MapKind, PatternKind,
};
use homcount::generators::{bits_from_str, bits_to_string, encode_string, grid, kneser_with, GenError, KneserParams};
use homcount::graph::io::{parse_bundle, Bundle};
use homcount::graph::named;
use homcount::linegraph::{decide_hom_to_line_with, line_graph, line_pattern_quantum, root_graph, LineError};
use homcount::quantum::{
    basis_transform, evaluate_quantum_with, extract_constituents_with, format_rational, sub_to_hom_quantum,
    QuantumError, QuantumGraph, Species,
};
use homcount::reductions::{
    check_certificate, clique_to_cpgrid, connectify_clique, crown, crown_grid, koenig_direct, koenig_hardness_pipeline,
    no_hom_certificate, universality_decode, universality_encode, AnswerOracle, Certification, Family, Hints,
    InstanceSource, ReductionError, TensorToy,
};
use homcount::{Graph, Limits, VertexColoring};
use std::io::Read;
use std::path::Path;
use std::time::{Duration, Instant};

pub fn run(cli: &Cli) -> Outcome {
    let limits = cli.limits();
    let f = cli.format;
    match &cli.command {
        Command::Gen { what } => gen(what, &limits, f),
        Command::Count(args) => count(args, &limits, f),
        Command::Quantum { what } => quantum(what, &limits, f),
        Command::Line(a) => {
            let g = read_graph(&a.input)?;
            if g.loop_count() > 0 {
                return Err(line_failure(LineError::Loops));
            }
            Ok(output::graph(&line_graph(&g).graph, f))
        }
        Command::Root(a) => {
            let l = read_graph(&a.input)?;
            let w = root_graph(&l).map_err(line_failure)?;
            let mut b = Bundle { graphs: vec![w.root.clone()], ..Bundle::default() };
            b.meta.insert("bipartite".into(), w.is_bipartite().to_string());
            b.meta.insert(
                "edge_map".into(),
                w.edge_map.iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(","),
            );
            if let Some(halves) = &w.bipartition {
                b.colorings.push(halves.clone());
            }
            Ok(output::bundle(&b, f))
        }
        Command::DecideLineHom(a) => {
            let h = read_graph(&a.pattern)?;
            let l = read_graph(&a.target)?;
            let yes = decide_hom_to_line_with(&h, &l, limits.exec).map_err(line_failure)?;
            Ok(output::scalar("hom", yes, f))
        }
        Command::Reduce { what } => reduce(what, &limits, f),
        Command::Certify(a) => certify(a, f),
        Command::Verify(a) => verify(a, cli, f),
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::usage(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn read_bundle(path: &Path) -> Result<Bundle, Failure> {
    parse_bundle(&read_text(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let b = read_bundle(path)?;
    b.first_graph().cloned().map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn count_failure(e: CountError) -> Failure {
    let code = match &e {
        CountError::BudgetExceeded { .. } => "budget-exceeded",
        CountError::MissingColoring(_) => "missing-coloring",
        CountError::ColoringMismatch(_) | CountError::InvalidWitness(_) => "coloring-mismatch",
        CountError::NotACore => "not-a-core",
        CountError::InvalidDecomposition(_) => "invalid-decomposition",
        CountError::DeadlineExceeded { .. } => "deadline-exceeded",
        CountError::Oracle(_) => "oracle",
    };
    Failure::reject(code, e)
}

fn gen_failure(e: GenError) -> Failure {
    let code = match e {
        GenError::VertexBudget { .. } => "budget-exceeded",
        _ => "bad-parameter",
    };
    Failure::reject(code, e)
}

fn reduction_failure(e: ReductionError) -> Failure {
    match e {
        ReductionError::Count(c) => count_failure(c),
        ReductionError::Generator(g) => gen_failure(g),
        ReductionError::InvalidColoring(_) => Failure::reject("invalid-coloring", e),
        ReductionError::BadParameter(_) => Failure::reject("bad-parameter", e),
        ReductionError::BudgetExceeded { .. } => Failure::reject("budget-exceeded", e),
        ReductionError::Inexact { .. } => Failure::reject("inexact", e),
    }
}

fn line_failure(e: LineError) -> Failure {
    let code = match e {
        LineError::NotALineGraph => "not-a-line-graph",
        LineError::Loops => "loops",
    };
    Failure::reject(code, e)
}

fn quantum_failure(e: QuantumError) -> Failure {
    match e {
        QuantumError::Count(c) => count_failure(c),
        QuantumError::BudgetExceeded { .. } => Failure::reject("budget-exceeded", e),
        QuantumError::NonIntegral(_) => Failure::reject("non-integral", e),
        QuantumError::TargetNotColorable => Failure::reject("not-colorable", e),
        other => Failure::reject("quantum", other),
    }
}

fn bits(x: &str) -> Result<Vec<bool>, Failure> {
    bits_from_str(x).ok_or_else(|| Failure::usage(format!("`{x}` is not a bit string")))
}

fn family(name: &str) -> Result<Family, Failure> {
    Family::by_name(name).ok_or_else(|| Failure::usage(format!("unknown family `{name}` (toy, antichain, kneser)")))
}

fn gen(what: &GenCommand, limits: &Limits, f: Format) -> Outcome {
    let g = match what {
        GenCommand::Kneser { r, s } => kneser_with(KneserParams::new(*r, *s), limits).map_err(gen_failure)?.graph,
        GenCommand::Grid { k } => {
            if *k == 0 {
                return Err(Failure::reject("bad-parameter", "grid side must be positive"));
            }
            grid(*k).graph
        }
        GenCommand::CrownGrid { k, looped } => crown_grid(*k, *looped).map_err(reduction_failure)?.graph,
        GenCommand::Named { name, n } => {
            let need = || n.ok_or_else(|| Failure::usage(format!("`{name}` needs --n")));
            match name.as_str() {
                "complete" => named::complete(need()?),
                "path" => named::path(need()?),
                "cycle" => {
                    let n = need()?;
                    if n < 3 {
                        return Err(Failure::reject("bad-parameter", "cycles need at least 3 vertices"));
                    }
                    named::cycle(n)
                }
                "star" => named::star(need()?),
                "petersen" => named::petersen(),
                "grotzsch" => named::grotzsch(),
                "chvatal" => named::chvatal(),
                _ => return Err(Failure::usage(format!("unknown graph `{name}`"))),
            }
        }
        GenCommand::String { x } => encode_string(&bits(x)?),
        GenCommand::Member { family: name, index } => family(name)?.graph(*index).map_err(reduction_failure)?.clone(),
    };
    Ok(output::graph(&g, f))
}

/// Target, counting pattern and coloring for the colored kinds.
fn colored_inputs(args: &CountArgs) -> Result<(Graph, Graph, VertexColoring), Failure> {
    let tpath = args.target.as_deref().ok_or_else(|| Failure::usage("--target is required"))?;
    let tb = read_bundle(tpath)?;
    let target = tb.first_graph().map_err(Failure::usage)?.clone();
    let codomain = match (&args.pattern, tb.graphs.get(1)) {
        (_, Some(c)) => c.clone(),
        (Some(p), None) => read_graph(p)?,
        (None, None) => return Err(Failure::usage("no pattern: pass --pattern or a bundle with two graphs")),
    };
    let pattern = match &args.pattern {
        Some(p) => read_graph(p)?,
        None => codomain.without_loops(),
    };
    let assignment = match &args.coloring {
        Some(c) => read_bundle(c)?.first_coloring().map(<[usize]>::to_vec),
        None => tb.first_coloring().map(<[usize]>::to_vec),
    }
    .ok_or_else(|| Failure::usage("no coloring: pass --coloring or a bundle with a coloring block"))?;
    if assignment.len() != target.vertex_count() {
        return Err(Failure::reject("coloring-mismatch", "coloring length differs from the target size"));
    }
    let c = VertexColoring::new(target.clone(), codomain, assignment)
        .map_err(|e| Failure::reject("invalid-coloring", e))?;
    Ok((target, pattern, c))
}

fn count(args: &CountArgs, limits: &Limits, f: Format) -> Outcome {
    let method_mismatch =
        || Failure::usage(format!("--method {:?} does not apply to this kind", args.method).to_lowercase());
    let n = match args.kind {
        Kind::Cphom | Kind::Colorful => {
            let (target, pattern, c) = colored_inputs(args)?;
            match (args.kind, args.method) {
                (Kind::Cphom, Method::Brute) => count_maps_with(MapKind::CpHom, &pattern, &target, Some(&c), limits),
                (Kind::Colorful, Method::Brute) => {
                    count_maps_with(MapKind::ColorfulHom, &pattern, &target, Some(&c), limits)
                }
                (Kind::Colorful, Method::Ie) => {
                    let td = tree_decomposition(&pattern);
                    colorful_incl_excl_with(&pattern, &target, &c, |t| count_homs_td(&pattern, &td, t), limits, None)
                }
                _ => return Err(method_mismatch()),
            }
        }
        Kind::Aut => {
            let p = args.pattern.as_deref().ok_or_else(|| Failure::usage("--pattern is required"))?;
            let h = read_graph(p)?;
            count_maps_with(MapKind::Aut, &h, &h, None, limits)
        }
        kind => {
            let p = args.pattern.as_deref().ok_or_else(|| Failure::usage("--pattern is required"))?;
            let t = args.target.as_deref().ok_or_else(|| Failure::usage("--target is required"))?;
            let h = read_graph(p)?;
            let g = read_graph(t)?;
            match (kind, args.method) {
                (Kind::Hom, Method::Td) => {
                    if h.loop_count() > 0 {
                        return Err(Failure::reject("loops", "the dynamic program needs a loop-free pattern"));
                    }
                    count_homs_td(&h, &tree_decomposition(&h), &g)
                }
                (_, Method::Td | Method::Ie) => return Err(method_mismatch()),
                (Kind::Hom, _) => count_maps_with(MapKind::Hom, &h, &g, None, limits),
                (Kind::Emb, _) => count_maps_with(MapKind::Emb, &h, &g, None, limits),
                (Kind::StrEmb, _) => count_maps_with(MapKind::StrEmb, &h, &g, None, limits),
                (Kind::Sub, _) => count_patterns_with(PatternKind::Sub, &h, &g, limits),
                (Kind::Indsub, _) => count_patterns_with(PatternKind::IndSub, &h, &g, limits),
                _ => unreachable!("handled above"),
            }
        }
    };
    Ok(output::scalar("count", n.map_err(count_failure)?, f))
}

fn species(s: SpeciesArg) -> Species {
    match s {
        SpeciesArg::Hom => Species::Hom,
        SpeciesArg::Emb => Species::Emb,
        SpeciesArg::StrEmb => Species::StrEmb,
    }
}

fn read_quantum(path: &Path) -> Result<QuantumGraph, Failure> {
    QuantumGraph::from_text(&read_text(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn quantum_out(q: &QuantumGraph, f: Format) -> String {
    match f {
        Format::Text => q.to_text(),
        Format::Structured => {
            let terms: Vec<serde_json::Value> = q
                .terms()
                .map(|(g, c)| {
                    let graph: serde_json::Value =
                        serde_json::from_str(&homcount::graph::io::graph_to_json(g)).expect("valid json");
                    serde_json::json!({ "coefficient": format_rational(c), "graph": graph })
                })
                .collect();
            format!("{}\n", serde_json::json!({ "terms": terms }))
        }
    }
}

fn td_backend(h: &Graph, g: &Graph) -> Result<num_bigint::BigUint, CountError> {
    count_homs_td(h, &tree_decomposition(h), g)
}

fn quantum(what: &QuantumCommand, limits: &Limits, f: Format) -> Outcome {
    match what {
        QuantumCommand::SubToHom { pattern } => {
            let q = sub_to_hom_quantum(&read_graph(pattern)?).map_err(quantum_failure)?;
            Ok(quantum_out(&q, f))
        }
        QuantumCommand::LinePattern { pattern } => {
            let q = line_pattern_quantum(&read_graph(pattern)?).map_err(quantum_failure)?;
            Ok(quantum_out(&q, f))
        }
        QuantumCommand::Transform { input, from, to } => {
            let q = basis_transform(&read_quantum(input)?, species(*from), species(*to)).map_err(quantum_failure)?;
            Ok(quantum_out(&q, f))
        }
        QuantumCommand::Eval { input, target } => {
            let q = read_quantum(input)?;
            let g = read_graph(target)?;
            let v = evaluate_quantum_with(&q, &g, td_backend, limits).map_err(count_failure)?;
            let text = if v.is_integer() { v.to_integer().to_string() } else { format_rational(&v) };
            Ok(output::scalar("value", text, f))
        }
        QuantumCommand::Extract { input, target } => {
            let q = read_quantum(input)?;
            let g = read_graph(target)?;
            let oracle = |t: &Graph| evaluate_quantum_with(&q, t, td_backend, limits);
            let ex = extract_constituents_with(&q, &g, oracle, None, limits).map_err(quantum_failure)?;
            match f {
                Format::Text => Ok(ex.values.iter().map(|(_, v)| format!("{v}\n")).collect()),
                Format::Structured => {
                    let values: Vec<String> = ex.values.iter().map(|(_, v)| v.to_string()).collect();
                    Ok(Record::new()
                        .with_json("values", serde_json::json!(values))
                        .with("queries", ex.queries)
                        .with("max_query_vertices", ex.max_query_vertices)
                        .render(f))
                }
            }
        }
    }
}

fn reduce(what: &ReduceCommand, limits: &Limits, f: Format) -> Outcome {
    match what {
        ReduceCommand::Connectify { input, k } => {
            let (g, k) = connectify_clique(&read_graph(input)?, *k).map_err(reduction_failure)?;
            let mut b = Bundle { graphs: vec![g], ..Bundle::default() };
            b.meta.insert("k".into(), k.to_string());
            Ok(output::bundle(&b, f))
        }
        ReduceCommand::Cpgrid { input, k } => {
            let inst = clique_to_cpgrid(&read_graph(input)?, *k).map_err(reduction_failure)?;
            let mut b = Bundle {
                graphs: vec![inst.graph.clone(), inst.coloring.pattern().clone()],
                colorings: vec![inst.coloring.assignment().to_vec()],
                ..Bundle::default()
            };
            b.meta.insert("k".into(), inst.k.to_string());
            b.meta.insert("normalizer".into(), format_rational(&inst.normalizer));
            Ok(output::bundle(&b, f))
        }
        ReduceCommand::Crown { input, k, witness } => {
            let inst = clique_to_cpgrid(&read_graph(input)?, *k).map_err(reduction_failure)?;
            let out = crown(&inst).map_err(reduction_failure)?;
            let mut graphs = vec![out.crown.clone(), out.coloring_hat.pattern().clone()];
            if *witness {
                graphs.push(out.bipartite_witness.clone());
            }
            let mut b = Bundle { graphs, colorings: vec![out.coloring_hat.assignment().to_vec()], ..Bundle::default() };
            b.meta.insert("k".into(), inst.k.to_string());
            b.meta.insert("normalizer".into(), format_rational(&inst.normalizer));
            Ok(output::bundle(&b, f))
        }
        ReduceCommand::Clique { input, k, incl_excl, deadline_secs } => {
            let g = read_graph(input)?;
            let report = if *incl_excl {
                let deadline = deadline_secs.map(|s| Instant::now() + Duration::from_secs(s));
                koenig_hardness_pipeline(&g, *k, td_backend, limits, deadline)
            } else {
                koenig_direct(&g, *k, limits)
            }
            .map_err(reduction_failure)?;
            Ok(Record::new()
                .with("cliques", &report.cliques)
                .with("k", report.k)
                .with("crown_vertices", report.crown_vertices)
                .with("cphoms", &report.cphoms)
                .with("automorphisms", &report.automorphisms)
                .with("colorful", &report.colorful)
                .render(f))
        }
        ReduceCommand::Encode { x, family: name } => {
            let src = TensorToy::new(family(name)?);
            let x = bits(x)?;
            let inst = src.instance(&x).map_err(reduction_failure)?;
            let enc = universality_encode(&inst, &src.family).map_err(reduction_failure)?;
            let mut b = Bundle {
                graphs: vec![enc.h_hat, enc.g_hat],
                colorings: vec![enc.coloring.assignment().to_vec()],
                ..Bundle::default()
            };
            b.meta.insert("family".into(), src.family.name.into());
            b.meta.insert("x".into(), bits_to_string(&x));
            b.meta.insert("kappa".into(), inst.kappa.to_string());
            b.meta.insert("pattern_index".into(), inst.pattern_index.to_string());
            b.meta.insert("companion_index".into(), enc.companion_index.to_string());
            b.meta.insert("normalizer".into(), format_rational(&inst.normalizer));
            Ok(output::bundle(&b, f))
        }
        ReduceCommand::Decode { input, family: name, count } => {
            let b = read_bundle(input)?;
            let [h, g] = &b.graphs[..] else {
                return Err(Failure::usage("decode needs a bundle with exactly two graphs (pattern, target)"));
            };
            let src = TensorToy::new(family(name)?);
            let answer = |x: &[bool]| src.answer(x);
            let oracle: Option<AnswerOracle<'_>> = count.then_some(&answer as _);
            let d = universality_decode(h, g, &src, oracle)
                .map_err(|r| Failure::reject(format!("decode-step-{}", r.step), r.reason))?;
            let mut rec = Record::new()
                .with("x", bits_to_string(&d.x))
                .with("kappa", d.kappa)
                .with("pattern_index", d.pattern_index)
                .with("companion_index", d.companion_index)
                .with("normalizer", format_rational(&d.normalizer))
                .with("factor", format_rational(&d.factor));
            if let Some(c) = &d.count {
                rec = rec.with("count", c);
            }
            Ok(rec.render(f))
        }
    }
}

fn certify(a: &CertifyArgs, f: Format) -> Outcome {
    let h = read_graph(&a.pattern)?;
    let g = read_graph(&a.target)?;
    let hints = Hints { h_chi_lower: a.chi_lower, g_coloring: None, g_vertex_transitive: a.transitive };
    match no_hom_certificate(&h, &g, &hints) {
        Certification::Proven(c) => {
            let checked = check_certificate(&c, &h, &g);
            let rec = Record::new()
                .with("certificate", c.summary())
                .with("checked", checked)
                .with_json("detail", serde_json::to_value(&c).expect("serializable"));
            Ok(rec.render(f))
        }
        Certification::Inconclusive => Ok(Record::new().with("certificate", "inconclusive").render(f)),
    }
}

fn verify(a: &VerifyArgs, cli: &Cli, f: Format) -> Outcome {
    let mut settings = Settings { seed: cli.seed, exec: cli.limits().exec, ..Settings::default() };
    if let Some(s) = a.chain_deadline_secs {
        settings.chain_deadline = Duration::from_secs(s);
    }
    let ids: Vec<u8> =
        if a.criteria.is_empty() { acceptance::CRITERIA.iter().map(|c| c.0).collect() } else { a.criteria.clone() };
    let outcomes: Vec<_> = ids.iter().map(|&id| acceptance::criterion(id, &settings)).collect();
    let failed: Vec<String> = outcomes.iter().filter(|o| !o.passed).map(|o| o.id.to_string()).collect();
    let body = match f {
        Format::Text => outcomes.iter().map(|o| format!("{}\n", o.line())).collect::<String>(),
        Format::Structured => format!("{}\n", serde_json::to_string(&outcomes).expect("serializable")),
    };
    if failed.is_empty() {
        Ok(body)
    } else {
        print!("{body}");
        Err(Failure::reject("criteria-failed", failed.join(",")))
    }
}
