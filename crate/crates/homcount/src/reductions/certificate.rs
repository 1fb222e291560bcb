//! Checkable reasons why no homomorphism `h → g` exists.
//!
//! A hom maps an odd cycle of `h` onto an odd closed walk of the same length,
//! so `g` needs an odd cycle at least that short; and it composes with colorings
//! of `g`, so `χ(h) ≤ χ(g)`.

use crate::graph::probe::CHROMATIC_EXACT_LIMIT;
use crate::graph::probe::{k_coloring, validate_coloring};
use crate::graph::{bipartition, odd_girth, odd_girth_from, shortest_odd_cycle, Graph};
use serde::{Deserialize, Serialize};

/// Largest graph whose odd girth is computed from every source.
pub const ODD_GIRTH_LIMIT: usize = 5000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ChromaticLower {
    /// Exhaustive search found no coloring with fewer colors.
    Exact(usize),
    Clique(Vec<usize>),
    OddCycle(Vec<usize>),
    /// Supplied by the caller, e.g. a known chromatic number.
    Trusted(usize),
}

impl ChromaticLower {
    pub fn value(&self) -> usize {
        match self {
            ChromaticLower::Exact(k) | ChromaticLower::Trusted(k) => *k,
            ChromaticLower::Clique(c) => c.len(),
            ChromaticLower::OddCycle(_) => 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NoHomCertificate {
    /// An odd cycle of `h` shorter than every odd cycle of `g` (`None`: `g` is bipartite).
    OddGirthGap { h_cycle: Vec<usize>, g_odd_girth: Option<usize>, single_source: bool },
    /// `χ(h) ≥ lower` while `g_coloring` is proper with fewer colors.
    ChromaticGap { lower: ChromaticLower, g_coloring: Vec<usize> },
}

impl NoHomCertificate {
    pub fn summary(&self) -> String {
        match self {
            NoHomCertificate::OddGirthGap { h_cycle, g_odd_girth, .. } => match g_odd_girth {
                Some(og) => format!("OddGirthGap({} < {og})", h_cycle.len()),
                None => format!("OddGirthGap({} < bipartite)", h_cycle.len()),
            },
            NoHomCertificate::ChromaticGap { lower, g_coloring } => {
                format!("ChromaticGap({} > {})", lower.value(), color_count(g_coloring))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certification {
    Proven(NoHomCertificate),
    Inconclusive,
}

#[derive(Clone, Debug, Default)]
pub struct Hints {
    /// A trusted lower bound on `χ(h)`.
    pub h_chi_lower: Option<usize>,
    /// A proper coloring of `g`; validated before use.
    pub g_coloring: Option<Vec<usize>>,
    /// Lets the odd girth of `g` be read off a single source.
    pub g_vertex_transitive: bool,
}

fn color_count(c: &[usize]) -> usize {
    let mut used = c.to_vec();
    used.sort_unstable();
    used.dedup();
    used.len()
}

fn g_odd_girth(g: &Graph, transitive: bool) -> Option<Option<usize>> {
    if g.vertex_count() == 0 {
        return Some(None);
    }
    if transitive {
        if bipartition(g).is_some() {
            return Some(None);
        }
        return Some(odd_girth_from(g, 0));
    }
    (g.vertex_count() <= ODD_GIRTH_LIMIT).then(|| odd_girth(g))
}

fn greedy_coloring(g: &Graph) -> Vec<usize> {
    let mut color = vec![usize::MAX; g.vertex_count()];
    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    for v in order {
        let taken: Vec<usize> = g.neighbors(v).iter().map(|&w| color[w]).collect();
        color[v] = (0..).find(|c| !taken.contains(c)).unwrap();
    }
    color
}

fn chromatic_lower(h: &Graph, hint: Option<usize>) -> Option<ChromaticLower> {
    if h.vertex_count() <= CHROMATIC_EXACT_LIMIT {
        let k = (0..=h.vertex_count()).find(|&k| k_coloring(h, k).is_some()).unwrap();
        return Some(ChromaticLower::Exact(k));
    }
    if let Some(k) = hint {
        return Some(ChromaticLower::Trusted(k));
    }
    if h.vertex_count() <= ODD_GIRTH_LIMIT {
        return shortest_odd_cycle(h).map(ChromaticLower::OddCycle);
    }
    None
}

/// A certificate that `#Hom(h, g) = 0`, or `Inconclusive`. Graphs with loops are
/// always inconclusive.
pub fn no_hom_certificate(h: &Graph, g: &Graph, hints: &Hints) -> Certification {
    if !h.is_simple() || !g.is_simple() || h.vertex_count() == 0 {
        return Certification::Inconclusive;
    }
    if g.vertex_count() == 0 {
        return Certification::Proven(NoHomCertificate::ChromaticGap {
            lower: ChromaticLower::Exact(1),
            g_coloring: Vec::new(),
        });
    }
    if h.vertex_count() <= ODD_GIRTH_LIMIT {
        if let (Some(cycle), Some(og)) = (shortest_odd_cycle(h), g_odd_girth(g, hints.g_vertex_transitive)) {
            if og.is_none_or(|og| cycle.len() < og) {
                return Certification::Proven(NoHomCertificate::OddGirthGap {
                    h_cycle: cycle,
                    g_odd_girth: og,
                    single_source: hints.g_vertex_transitive,
                });
            }
        }
    }
    let Some(lower) = chromatic_lower(h, hints.h_chi_lower) else {
        return Certification::Inconclusive;
    };
    let supplied = hints.g_coloring.as_ref().filter(|c| validate_coloring(g, c).is_ok()).cloned();
    let g_coloring = supplied.unwrap_or_else(|| {
        if g.vertex_count() <= CHROMATIC_EXACT_LIMIT {
            (0..=g.vertex_count()).find_map(|k| k_coloring(g, k)).unwrap()
        } else {
            greedy_coloring(g)
        }
    });
    if color_count(&g_coloring) < lower.value() {
        Certification::Proven(NoHomCertificate::ChromaticGap { lower, g_coloring })
    } else {
        Certification::Inconclusive
    }
}

fn is_cycle(h: &Graph, c: &[usize]) -> bool {
    let mut seen = c.to_vec();
    seen.sort_unstable();
    seen.dedup();
    c.len() >= 3
        && seen.len() == c.len()
        && c.iter().all(|&v| v < h.vertex_count())
        && (0..c.len()).all(|i| h.has_edge(c[i], c[(i + 1) % c.len()]))
}

/// Re-derives every claim of `cert` except trusted chromatic bounds and the
/// vertex-transitivity behind a single-source odd girth.
pub fn check_certificate(cert: &NoHomCertificate, h: &Graph, g: &Graph) -> bool {
    if !h.is_simple() || !g.is_simple() {
        return false;
    }
    match cert {
        NoHomCertificate::OddGirthGap { h_cycle, g_odd_girth: claimed, single_source } => {
            if !is_cycle(h, h_cycle) || h_cycle.len() % 2 == 0 {
                return false;
            }
            let actual = if bipartition(g).is_some() {
                None
            } else if *single_source {
                odd_girth_from(g, 0)
            } else {
                odd_girth(g)
            };
            actual == *claimed && actual.is_none_or(|og| h_cycle.len() < og)
        }
        NoHomCertificate::ChromaticGap { lower, g_coloring } => {
            let lower_ok = match lower {
                ChromaticLower::Exact(k) => *k == 0 || k_coloring(h, k - 1).is_none(),
                ChromaticLower::Clique(c) => {
                    c.iter().all(|&v| v < h.vertex_count())
                        && c.iter().enumerate().all(|(i, &u)| c[i + 1..].iter().all(|&v| h.has_edge(u, v)))
                }
                ChromaticLower::OddCycle(c) => is_cycle(h, c) && c.len() % 2 == 1,
                ChromaticLower::Trusted(_) => true,
            };
            lower_ok && validate_coloring(g, g_coloring).is_ok() && color_count(g_coloring) < lower.value()
        }
    }
}
