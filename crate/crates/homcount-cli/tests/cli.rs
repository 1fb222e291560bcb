use homcount::graph::io::{parse_bundle, parse_graph, write_graph};
use homcount::graph::named::{complete, cycle, petersen, star};
use homcount::Graph;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_homcount"));
    c.env_remove("HOMCOUNT_FORMAT").env_remove("HOMCOUNT_BUDGET").env_remove("HOMCOUNT_SEED");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child =
        bin().args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "failed: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, g: &Graph) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("homcount-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, write_graph(g)).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn kneser_5_2_has_10_vertices_and_15_edges() {
    let g = parse_graph(&stdout(&run(&["gen", "kneser", "--r", "5", "--s", "2"]))).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (10, 15));
}

#[test]
fn homs_from_k1_count_vertices() {
    let k1 = scratch("k1.g", &complete(1));
    for (name, g) in [("p.g", petersen()), ("c7.g", cycle(7)), ("s.g", star(4))] {
        let t = scratch(name, &g);
        let out = stdout(&run(&["count", "--kind", "hom", "--pattern", s(&k1), "--target", s(&t)]));
        assert_eq!(out, format!("{}\n", g.vertex_count()));
    }
}

#[test]
fn cpgrid_bundle_pipes_into_cphom_count() {
    let k4 = scratch("k4.g", &complete(4));
    let bundle = stdout(&run(&["reduce", "cpgrid", "--k", "3", "--input", s(&k4)]));
    let out = stdout(&run_stdin(&["count", "--kind", "cphom", "--target", "-"], bundle.as_bytes()));
    assert_eq!(out, "24\n");
    let crown = stdout(&run(&["reduce", "crown", "--k", "3", "--input", s(&k4)]));
    assert_eq!(stdout(&run_stdin(&["count", "--kind", "cphom", "--target", "-"], crown.as_bytes())), "24\n");
    let report = stdout(&run(&["reduce", "clique", "--k", "3", "--input", s(&k4)]));
    assert!(report.starts_with("cliques 4\n"), "{report}");
}

#[test]
fn species_counts() {
    let k4 = scratch("k4s.g", &complete(4));
    let p2 = scratch("p2.g", &homcount::graph::named::path(2));
    let k3 = scratch("k3.g", &complete(3));
    let claw = scratch("claw.g", &star(3));
    let count = |kind: &str, h: &PathBuf, g: &PathBuf| {
        stdout(&run(&["count", "--kind", kind, "--pattern", s(h), "--target", s(g)]))
    };
    assert_eq!(count("sub", &p2, &k4), "12\n");
    assert_eq!(count("indsub", &k3, &claw), "0\n");
    assert_eq!(count("hom", &k3, &k3), "6\n");
    assert_eq!(
        stdout(&run(&["count", "--kind", "hom", "--method", "td", "--pattern", s(&p2), "--target", s(&k3)])),
        "12\n"
    );
    assert_eq!(stdout(&run(&["count", "--kind", "aut", "--pattern", s(&k3)])), "6\n");
}

#[test]
fn output_is_deterministic() {
    let k4 = scratch("k4d.g", &complete(4));
    let cases: Vec<Vec<&str>> = vec![
        vec!["gen", "kneser", "--r", "7", "--s", "2"],
        vec!["reduce", "crown", "--k", "3", "--input", s(&k4)],
        vec!["reduce", "encode", "--x", "0110"],
        vec!["quantum", "sub-to-hom", "--pattern", s(&k4)],
        vec!["--format", "structured", "line", "--input", s(&k4)],
    ];
    for args in cases {
        let a = run(&args);
        let b = run(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn graph_outputs_round_trip() {
    for args in [
        ["gen", "kneser", "--r", "6", "--s", "2"],
        ["gen", "grid", "--k", "4", "", ""],
        ["gen", "crown-grid", "--k", "2", "--looped", ""],
    ] {
        let args: Vec<&str> = args.into_iter().filter(|a| !a.is_empty()).collect();
        let text = stdout(&run(&args));
        let g = parse_graph(&text).unwrap();
        assert_eq!(write_graph(&g), text);
        let mut structured = vec!["--format", "structured"];
        structured.extend(&args);
        assert_eq!(parse_graph(&stdout(&run(&structured))).unwrap(), g);
    }
    let k4 = scratch("k4r.g", &complete(4));
    let bundle = stdout(&run(&["reduce", "cpgrid", "--k", "3", "--input", s(&k4)]));
    assert_eq!(homcount::graph::io::bundle_to_text(&parse_bundle(&bundle).unwrap()), bundle);
    let line = stdout(&run(&["line", "--input", s(&k4)]));
    let root = parse_bundle(&stdout(&run_stdin(&["root"], line.as_bytes()))).unwrap();
    assert!(homcount::graph::is_isomorphic(&root.graphs[0], &complete(4)));
}

#[test]
fn encode_then_decode_recovers_the_string() {
    let enc = stdout(&run(&["reduce", "encode", "--x", "0110"]));
    let out = stdout(&run_stdin(&["reduce", "decode", "--count"], enc.as_bytes()));
    assert!(out.starts_with("x 0110\nkappa 0\n"), "{out}");
    assert!(out.contains("normalizer 1/120\n"));
}

#[test]
fn domain_rejections_exit_1_with_a_reason_line() {
    let claw = scratch("claw-r.g", &star(3));
    let o = run(&["root", "--input", s(&claw)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("reject not-a-line-graph:"));

    let k3 = scratch("k3-r.g", &complete(3));
    let o = run(&["--budget", "2", "count", "--kind", "hom", "--pattern", s(&k3), "--target", s(&k3)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("reject budget-exceeded:"));

    let o =
        bin().env("HOMCOUNT_FORMAT", "structured").args(["gen", "kneser", "--r", "2", "--s", "3"]).output().unwrap();
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(v["reject"], "bad-parameter");

    let o = run_stdin(&["reduce", "decode"], write_graph(&complete(3)).as_bytes());
    assert_eq!(o.status.code(), Some(2));
    let mut two = write_graph(&complete(3));
    two.push_str(&write_graph(&complete(3)));
    let o = run_stdin(&["reduce", "decode"], two.as_bytes());
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("reject decode-step-1:"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["count", "--kind", "bogus"]).status.code(), Some(2));
    assert_eq!(run(&["count", "--kind", "hom"]).status.code(), Some(2));
    assert_eq!(run(&["line", "--input", "/nonexistent/graph"]).status.code(), Some(2));
    assert_eq!(run_stdin(&["line"], b"graph 2\ne 0 7\n").status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn certificates_and_decisions() {
    let k4 = scratch("k4c.g", &complete(4));
    let p = scratch("pc.g", &petersen());
    let out = stdout(&run(&["certify", "--pattern", s(&k4), "--target", s(&p)]));
    assert!(out.starts_with("certificate "), "{out}");
    assert!(out.contains("checked true"));
    assert_eq!(stdout(&run(&["certify", "--pattern", s(&p), "--target", s(&k4)])), "certificate inconclusive\n");
    assert_eq!(stdout(&run(&["decide-line-hom", "--pattern", s(&p), "--target", s(&k4)])), "true\n");
}

#[test]
fn quantum_sub_expansion_evaluates_to_the_subgraph_count() {
    let p2 = scratch("p2q.g", &homcount::graph::named::path(2));
    let k4 = scratch("k4q.g", &complete(4));
    let q = stdout(&run(&["quantum", "sub-to-hom", "--pattern", s(&p2)]));
    assert_eq!(stdout(&run_stdin(&["quantum", "eval", "--input", "-", "--target", s(&k4)], q.as_bytes())), "12\n");
}

#[test]
fn verify_runs_selected_criteria() {
    let out = stdout(&run(&["verify", "--criterion", "1", "--criterion", "13"]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines.iter().all(|l| l.starts_with("PASS")), "{out}");
}
