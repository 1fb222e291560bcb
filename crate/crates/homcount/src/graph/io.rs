//! Text and JSON formats.
//!
//! ```text
//! graph 3
//! e 0 1
//! e 1 2
//! e 2 2
//! ```
//! `e v v` is a loop. Colorings use `coloring <n>` followed by `c <target> <pattern>`
//! lines. A bundle is any sequence of such blocks plus `meta <key> <value>` lines;
//! blank lines and lines starting with `#` are skipped.

use super::Graph;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("expected a {0} block")]
    Missing(&'static str),
    #[error("invalid json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid graph: {0}")]
    Graph(#[from] super::GraphError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub vertex_count: usize,
    pub edges: Vec<[usize; 2]>,
    pub loops: Vec<usize>,
}

impl From<&Graph> for GraphRecord {
    fn from(g: &Graph) -> Self {
        GraphRecord {
            vertex_count: g.vertex_count(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            loops: g.loops().collect(),
        }
    }
}

impl TryFrom<GraphRecord> for Graph {
    type Error = super::GraphError;
    fn try_from(r: GraphRecord) -> Result<Self, Self::Error> {
        let loops = r.loops.into_iter().map(|v| (v, v));
        Graph::from_edges(r.vertex_count, r.edges.into_iter().map(|[u, v]| (u, v)).chain(loops))
    }
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("graph {}\n", g.vertex_count());
    let mut all: Vec<(usize, usize)> = g.edges().chain(g.loops().map(|v| (v, v))).collect();
    all.sort_unstable();
    for (u, v) in all {
        writeln!(s, "e {u} {v}").unwrap();
    }
    s
}

pub fn write_coloring(assignment: &[usize]) -> String {
    let mut s = format!("coloring {}\n", assignment.len());
    for (v, c) in assignment.iter().enumerate() {
        writeln!(s, "c {v} {c}").unwrap();
    }
    s
}

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphRecord::from(g)).unwrap()
}

pub fn graph_from_json(s: &str) -> Result<Graph, ParseError> {
    let r: GraphRecord = serde_json::from_str(s)?;
    Ok(Graph::try_from(r)?)
}

/// A parsed sequence of blocks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Bundle {
    pub graphs: Vec<Graph>,
    pub colorings: Vec<Vec<usize>>,
    pub meta: BTreeMap<String, String>,
}

impl Bundle {
    pub fn first_graph(&self) -> Result<&Graph, ParseError> {
        self.graphs.first().ok_or(ParseError::Missing("graph"))
    }

    pub fn first_coloring(&self) -> Option<&[usize]> {
        self.colorings.first().map(Vec::as_slice)
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let b = parse_bundle(text)?;
    b.graphs.into_iter().next().ok_or(ParseError::Missing("graph"))
}

pub fn parse_bundle(text: &str) -> Result<Bundle, ParseError> {
    let text = text.trim_start();
    if text.starts_with('{') || text.starts_with('[') {
        return parse_json_bundle(text);
    }
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .peekable();
    let mut out = Bundle::default();
    while let Some((line, l)) = lines.next() {
        let mut parts = l.split_whitespace();
        let head = parts.next().unwrap();
        let err = |msg: &str| ParseError::Syntax { line, msg: msg.to_string() };
        match head {
            "graph" => {
                let n = number(parts.next(), line)?;
                let mut edges = Vec::new();
                while let Some(&(ln, nl)) = lines.peek() {
                    let mut p = nl.split_whitespace();
                    if p.next() != Some("e") {
                        break;
                    }
                    edges.push((number(p.next(), ln)?, number(p.next(), ln)?));
                    lines.next();
                }
                out.graphs.push(Graph::from_edges(n, edges)?);
            }
            "coloring" => {
                let n = number(parts.next(), line)?;
                let mut c = vec![usize::MAX; n];
                while let Some(&(ln, nl)) = lines.peek() {
                    let mut p = nl.split_whitespace();
                    if p.next() != Some("c") {
                        break;
                    }
                    let v = number(p.next(), ln)?;
                    let col = number(p.next(), ln)?;
                    if v >= n {
                        return Err(ParseError::Syntax { line: ln, msg: "vertex out of range".into() });
                    }
                    c[v] = col;
                    lines.next();
                }
                if c.contains(&usize::MAX) {
                    return Err(err("coloring leaves a vertex unassigned"));
                }
                out.colorings.push(c);
            }
            "meta" => {
                let key = parts.next().ok_or_else(|| err("meta needs a key"))?;
                let value: Vec<&str> = parts.collect();
                out.meta.insert(key.to_string(), value.join(" "));
            }
            _ => return Err(err(&format!("unexpected `{head}`"))),
        }
    }
    Ok(out)
}

fn number(tok: Option<&str>, line: usize) -> Result<usize, ParseError> {
    tok.and_then(|t| t.parse().ok()).ok_or(ParseError::Syntax { line, msg: "expected a non-negative integer".into() })
}

#[derive(Serialize, Deserialize, Default)]
struct JsonBundle {
    #[serde(default)]
    graphs: Vec<GraphRecord>,
    #[serde(default)]
    colorings: Vec<Vec<usize>>,
    #[serde(default)]
    meta: BTreeMap<String, String>,
}

fn parse_json_bundle(text: &str) -> Result<Bundle, ParseError> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    let jb: JsonBundle = if value.get("vertex_count").is_some() {
        JsonBundle { graphs: vec![serde_json::from_value(value)?], ..Default::default() }
    } else {
        serde_json::from_value(value)?
    };
    let graphs = jb.graphs.into_iter().map(Graph::try_from).collect::<Result<_, _>>()?;
    Ok(Bundle { graphs, colorings: jb.colorings, meta: jb.meta })
}

pub fn bundle_to_json(b: &Bundle) -> String {
    let jb = JsonBundle {
        graphs: b.graphs.iter().map(GraphRecord::from).collect(),
        colorings: b.colorings.clone(),
        meta: b.meta.clone(),
    };
    serde_json::to_string(&jb).unwrap()
}

pub fn bundle_to_text(b: &Bundle) -> String {
    let mut s = String::new();
    for (k, v) in &b.meta {
        writeln!(s, "meta {k} {v}").unwrap();
    }
    for g in &b.graphs {
        s.push_str(&write_graph(g));
    }
    for c in &b.colorings {
        s.push_str(&write_coloring(c));
    }
    s
}
