//! Quantum graphs: finite rational combinations of graphs, their basis changes
//! between hom, embedding and strong-embedding counts, and constituent extraction.

mod extract;

pub use crate::partition::partition_mobius;
pub use extract::{extract_constituents, extract_constituents_with, Extraction};

use crate::counting::{automorphism_count, count_maps_with, exists_hom, CountError, MapKind};
use crate::graph::io::{parse_graph, write_graph, ParseError};
use crate::graph::{canonical_form, quotient, CanonicalForm, Graph, GraphError};
use crate::partition::spasm_partitions;
use crate::{par, Limits};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Largest constituent whose partitions are enumerated.
pub const PARTITION_VERTEX_LIMIT: usize = 10;
/// Largest number of non-edges whose subsets are enumerated.
pub const SUPERSET_NONEDGE_LIMIT: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuantumError {
    #[error("no direct basis change from {from:?} to {to:?}")]
    UnsupportedSpeciesPair { from: Species, to: Species },
    #[error("{what} is {got}, limit is {limit}")]
    BudgetExceeded { what: &'static str, got: usize, limit: usize },
    #[error(transparent)]
    Count(#[from] CountError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("value {0} is not an integer")]
    NonIntegral(BigRational),
    #[error("test graphs up to {vertices} vertices reach rank {rank} of {needed}")]
    RankDeficiencyTimeout { vertices: usize, rank: usize, needed: usize },
    #[error("target is not colorable by the constraint graph")]
    TargetNotColorable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Species {
    Hom,
    Emb,
    StrEmb,
}

impl Species {
    pub fn map_kind(self) -> MapKind {
        match self {
            Species::Hom => MapKind::Hom,
            Species::Emb => MapKind::Emb,
            Species::StrEmb => MapKind::StrEmb,
        }
    }
}

/// `Σ λ_H · H` over loop-free graphs, keyed by canonical form. Zero
/// coefficients are never stored. Representatives are in canonical vertex order.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct QuantumGraph {
    terms: BTreeMap<CanonicalForm, (Graph, BigRational)>,
}

impl QuantumGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(g: &Graph) -> Self {
        let mut q = Self::new();
        q.add_term(g, BigRational::one());
        q
    }

    pub fn from_terms<'a, I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (BigRational, &'a Graph)>,
    {
        let mut q = Self::new();
        for (c, g) in terms {
            q.add_term(g, c);
        }
        q
    }

    /// Adds `coeff · g`, merging with an isomorphic term.
    ///
    /// # Panics
    /// If `g` has loops.
    pub fn add_term(&mut self, g: &Graph, coeff: BigRational) {
        assert!(g.is_simple(), "quantum graph constituents are loop-free");
        if coeff.is_zero() {
            return;
        }
        let form = canonical_form(g);
        match self.terms.get_mut(&form) {
            Some((_, c)) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&form);
                }
            }
            None => {
                let rep = form.to_graph();
                self.terms.insert(form, (rep, coeff));
            }
        }
    }

    pub fn add(&mut self, other: &QuantumGraph, scale: &BigRational) {
        for (g, c) in other.terms() {
            self.add_term(g, c * scale);
        }
    }

    pub fn scaled(&self, s: &BigRational) -> QuantumGraph {
        let mut q = QuantumGraph::new();
        q.add(self, s);
        q
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical-form order.
    pub fn terms(&self) -> impl Iterator<Item = (&Graph, &BigRational)> {
        self.terms.values().map(|(g, c)| (g, c))
    }

    pub fn support(&self) -> impl Iterator<Item = &Graph> {
        self.terms.values().map(|(g, _)| g)
    }

    pub fn coefficient(&self, g: &Graph) -> BigRational {
        self.terms.get(&canonical_form(g)).map_or_else(BigRational::zero, |(_, c)| c.clone())
    }

    pub fn max_vertices(&self) -> usize {
        self.support().map(Graph::vertex_count).max().unwrap_or(0)
    }

    /// `quantum <t>`, then per term a `num/den` line and a graph block.
    pub fn to_text(&self) -> String {
        let mut out = format!("quantum {}\n", self.len());
        for (g, c) in self.terms() {
            out.push_str(&format!("{}/{}\n", c.numer(), c.denom()));
            out.push_str(&write_graph(g));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .peekable();
        let (line, header) = lines.next().ok_or(ParseError::Missing("quantum"))?;
        let t: usize = header
            .strip_prefix("quantum ")
            .and_then(|s| s.trim().parse().ok())
            .ok_or_else(|| ParseError::Syntax { line, msg: format!("bad quantum header `{header}`") })?;
        let mut q = QuantumGraph::new();
        for _ in 0..t {
            let (line, coeff) = lines.next().ok_or(ParseError::Missing("coefficient"))?;
            let coeff = parse_rational(coeff)
                .ok_or_else(|| ParseError::Syntax { line, msg: format!("bad rational `{coeff}`") })?;
            let (_, head) = lines.next().ok_or(ParseError::Missing("graph"))?;
            let mut block = format!("{head}\n");
            while let Some(&(_, l)) = lines.peek() {
                if !l.starts_with("e ") {
                    break;
                }
                block.push_str(l);
                block.push('\n');
                lines.next();
            }
            q.add_term(&parse_graph(&block)?, coeff);
        }
        Ok(q)
    }
}

impl fmt::Debug for QuantumGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.terms().map(|(g, c)| format!("{c}·[{}v {}e]", g.vertex_count(), g.edge_count())).collect();
        write!(f, "Q({})", parts.join(" + "))
    }
}

pub fn parse_rational(s: &str) -> Option<BigRational> {
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: BigInt = n.trim().parse().ok()?;
    let d: BigInt = d.trim().parse().ok()?;
    (!d.is_zero()).then(|| BigRational::new(n, d))
}

pub fn format_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn ratio(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

fn ratio_u(n: BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Rewrites `q` so that `Σ λ' · #to(·, G) = Σ λ · #from(·, G)` for every `G`.
///
/// Hom and Emb are related by a sum over spasm partitions (with partition Möbius
/// weights in the Emb to Hom direction); Emb and StrEmb by a sum over edge
/// supersets on the same vertex set (alternating signs towards Emb).
pub fn basis_transform(q: &QuantumGraph, from: Species, to: Species) -> Result<QuantumGraph, QuantumError> {
    use Species::*;
    let mut out = QuantumGraph::new();
    match (from, to) {
        _ if from == to => return Ok(q.clone()),
        (Hom, Emb) | (Emb, Hom) => {
            let mobius = from == Emb;
            for (h, c) in q.terms() {
                check_partition_budget(h)?;
                for rho in spasm_partitions(h) {
                    let weight = if mobius { ratio(partition_mobius(&rho)) } else { BigRational::one() };
                    out.add_term(&quotient(h, &rho)?, c * weight);
                }
            }
        }
        (Emb, StrEmb) | (StrEmb, Emb) => {
            let signed = from == StrEmb;
            for (h, c) in q.terms() {
                for_each_superset(h, |sup| {
                    let flip = (sup.edge_count() - h.edge_count()) % 2 == 1;
                    let weight = if signed && flip { -c.clone() } else { c.clone() };
                    out.add_term(sup, weight);
                })?;
            }
        }
        _ => return Err(QuantumError::UnsupportedSpeciesPair { from, to }),
    }
    Ok(out)
}

fn check_partition_budget(h: &Graph) -> Result<(), QuantumError> {
    if h.vertex_count() > PARTITION_VERTEX_LIMIT {
        return Err(QuantumError::BudgetExceeded {
            what: "constituent size",
            got: h.vertex_count(),
            limit: PARTITION_VERTEX_LIMIT,
        });
    }
    Ok(())
}

/// Calls `f` on every graph on `V(h)` whose edge set contains `E(h)`.
pub fn for_each_superset(h: &Graph, mut f: impl FnMut(&Graph)) -> Result<(), QuantumError> {
    let missing = h.complement_pairs();
    if missing.len() > SUPERSET_NONEDGE_LIMIT {
        return Err(QuantumError::BudgetExceeded {
            what: "non-edge count",
            got: missing.len(),
            limit: SUPERSET_NONEDGE_LIMIT,
        });
    }
    for mask in 0u32..1 << missing.len() {
        let extra = missing.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p);
        f(&h.with_edges(extra)?);
    }
    Ok(())
}

/// Quantum graph `Q` with `#Hom(Q, G) = #Sub(h, G)` for every `G`, supported on
/// the spasms of `h`.
pub fn sub_to_hom_quantum(h: &Graph) -> Result<QuantumGraph, QuantumError> {
    if h.vertex_count() > 8 {
        return Err(QuantumError::BudgetExceeded { what: "pattern size", got: h.vertex_count(), limit: 8 });
    }
    let aut = automorphism_count(h)?;
    let emb = QuantumGraph::from_terms([(BigRational::new(BigInt::one(), BigInt::from(aut)), h)]);
    basis_transform(&emb, Species::Emb, Species::Hom)
}

/// `Σ λ_H · backend(H, g)`.
pub fn evaluate_quantum<B>(q: &QuantumGraph, g: &Graph, backend: B) -> Result<BigRational, CountError>
where
    B: Fn(&Graph, &Graph) -> Result<BigUint, CountError> + Sync + Send,
{
    evaluate_quantum_with(q, g, backend, &Limits::default())
}

pub fn evaluate_quantum_with<B>(
    q: &QuantumGraph,
    g: &Graph,
    backend: B,
    limits: &Limits,
) -> Result<BigRational, CountError>
where
    B: Fn(&Graph, &Graph) -> Result<BigUint, CountError> + Sync + Send,
{
    let terms: Vec<(&Graph, &BigRational)> = q.terms().collect();
    let values = par::try_map(limits.exec, &terms, |(h, c)| Ok::<_, CountError>(*c * ratio_u(backend(h, g)?)))?;
    Ok(values.into_iter().fold(BigRational::zero(), |a, b| a + b))
}

/// Evaluation with brute-force hom counts, required to be a non-negative integer.
pub fn evaluate_integral(q: &QuantumGraph, g: &Graph) -> Result<BigUint, QuantumError> {
    let limits = Limits::default().with_pattern_budget(PARTITION_VERTEX_LIMIT);
    let v = evaluate_quantum(q, g, |h, t| count_maps_with(MapKind::Hom, h, t, None, &limits))?;
    assert_integral(&v)
}

/// Integrality hook for values that must be counts.
pub fn assert_integral(v: &BigRational) -> Result<BigUint, QuantumError> {
    if !v.is_integer() || v.is_negative() {
        return Err(QuantumError::NonIntegral(v.clone()));
    }
    Ok(v.to_integer().to_biguint().expect("non-negative"))
}

/// Drops every constituent without a homomorphism into `f`.
pub fn restrict_colorable(q: &QuantumGraph, f: &Graph) -> Result<QuantumGraph, QuantumError> {
    let limits = Limits::default();
    let mut out = QuantumGraph::new();
    for (h, c) in q.terms() {
        if h.vertex_count() > limits.pattern_budget {
            return Err(CountError::BudgetExceeded {
                what: "constituent",
                got: h.vertex_count(),
                limit: limits.pattern_budget,
            }
            .into());
        }
        if exists_hom(h, f) {
            out.add_term(h, c.clone());
        }
    }
    Ok(out)
}
