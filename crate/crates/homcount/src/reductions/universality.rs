//! Encoding instances of a counting problem into hom-counting instances over
//! Kneser graphs, and the decoder that inverts it.
//!
//! `Ĥ = H_x ∪ K(2κ+3)` and `Ĝ = G_x ∪ enc(⟨x, H_x⟩) ∪ K(2κ+3)`, where `H_x` has
//! an even index, `K(2κ+3)` an odd one, and `⟨x, H_x⟩` is the bit string
//!
//! ```text
//! 1 · 1^|x| 0 · x · 1^|b| 0 · b
//! ```
//!
//! with `b` the index of `H_x` in binary, most significant bit first.

use super::ReductionError;
use crate::counting::{automorphism_count, count_maps_with, MapKind};
use crate::generators::{binomial, decode_string, encode_string, kneser, DecodeFailure, KneserParams};
use crate::graph::named::{chvatal, complete, grotzsch};
use crate::graph::{
    canonical_form, chromatic_number, components, disjoint_union, induced_subgraph, is_connected, tensor_product,
    Graph, VertexColoring,
};
use crate::Limits;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::sync::OnceLock;
use thiserror::Error;

/// Members up to this size are recognized by isomorphism, larger Kneser members
/// by their vertex count, edge count and regularity alone.
pub const ISOMORPHISM_LIMIT: usize = 100;

#[derive(Clone, Debug)]
enum Spec {
    Kneser(KneserParams),
    Explicit(Graph),
}

#[derive(Debug)]
struct Member {
    index: usize,
    spec: Spec,
    built: OnceLock<(Graph, Vec<usize>)>,
}

/// Graphs indexed by integers `≥ 3`; even indices are patterns, odd ones companions.
#[derive(Debug)]
pub struct Family {
    pub name: &'static str,
    members: Vec<Member>,
}

impl Family {
    fn new(name: &'static str, specs: Vec<(usize, Spec)>) -> Self {
        Family {
            name,
            members: specs.into_iter().map(|(index, spec)| Member { index, spec, built: OnceLock::new() }).collect(),
        }
    }

    /// `n ↦ K((2n+1)(n−2), n(n−2))` for `3 ≤ n ≤ max_index`.
    pub fn kneser(max_index: usize) -> Self {
        let specs = (3..=max_index).map(|n| (n, Spec::Kneser(KneserParams::family(n).expect("n >= 3")))).collect();
        Family::new("kneser", specs)
    }

    /// Small Kneser graphs with the genuine `K(3) = K(7,3)` at index 3.
    pub fn toy() -> Self {
        let k = |r, s| Spec::Kneser(KneserParams::new(r, s));
        Family::new("toy", vec![(3, k(7, 3)), (4, k(5, 2)), (5, k(3, 1)), (6, k(6, 2)), (7, k(4, 1))])
    }

    /// `K_3`, the Grötzsch graph and the Chvátal graph: pairwise without homomorphisms.
    pub fn antichain() -> Self {
        Family::new(
            "antichain",
            vec![(3, Spec::Explicit(complete(3))), (4, Spec::Explicit(grotzsch())), (6, Spec::Explicit(chvatal()))],
        )
    }

    pub fn by_name(name: &str) -> Option<Self> {
        match name {
            "kneser" => Some(Family::kneser(4)),
            "toy" => Some(Family::toy()),
            "antichain" => Some(Family::antichain()),
            _ => None,
        }
    }

    pub fn indices(&self) -> Vec<usize> {
        self.members.iter().map(|m| m.index).collect()
    }

    pub fn even_indices(&self) -> Vec<usize> {
        self.indices().into_iter().filter(|n| n % 2 == 0).collect()
    }

    /// Largest `κ` with `K(2κ'+3)` present for every `κ' ≤ κ`.
    pub fn max_kappa(&self) -> Option<usize> {
        let has = |n| self.members.iter().any(|m| m.index == n);
        (0..).take_while(|&k| has(2 * k + 3)).last()
    }

    fn member(&self, n: usize) -> Result<&Member, ReductionError> {
        self.members
            .iter()
            .find(|m| m.index == n)
            .ok_or_else(|| ReductionError::BadParameter(format!("family {} has no index {n}", self.name)))
    }

    fn built(&self, n: usize) -> Result<&(Graph, Vec<usize>), ReductionError> {
        let m = self.member(n)?;
        if let Some(b) = m.built.get() {
            return Ok(b);
        }
        let b = match &m.spec {
            Spec::Kneser(p) => {
                let k = kneser(*p)?;
                (k.graph, k.coloring)
            }
            Spec::Explicit(g) => (g.clone(), chromatic_number(g, None)?.coloring),
        };
        Ok(m.built.get_or_init(|| b))
    }

    pub fn graph(&self, n: usize) -> Result<&Graph, ReductionError> {
        Ok(&self.built(n)?.0)
    }

    /// A proper coloring of member `n`.
    pub fn coloring(&self, n: usize) -> Result<&[usize], ReductionError> {
        Ok(&self.built(n)?.1)
    }

    pub fn color_count(&self, n: usize) -> Result<usize, ReductionError> {
        Ok(self.coloring(n)?.iter().max().map_or(0, |&c| c + 1))
    }

    /// `#Aut` of member `n`; `r!` for a Kneser graph `K(r, s)` with `r > 2s`.
    pub fn automorphisms(&self, n: usize) -> Result<BigUint, ReductionError> {
        match &self.member(n)?.spec {
            Spec::Kneser(p) if p.r > 2 * p.s => Ok(super::factorial(p.r)),
            _ => Ok(automorphism_count(self.graph(n)?)?),
        }
    }

    /// Whether `g` is member `n`.
    pub fn is_member(&self, n: usize, g: &Graph) -> bool {
        let Ok(m) = self.member(n) else {
            return false;
        };
        match &m.spec {
            Spec::Kneser(p) => {
                let verts = binomial(p.r, p.s);
                let deg = binomial(p.r - p.s, p.s);
                if g.vertex_count() as u128 != verts || !g.is_simple() {
                    return false;
                }
                if (0..g.vertex_count()).any(|v| g.degree(v) as u128 != deg) {
                    return false;
                }
                if g.vertex_count() > ISOMORPHISM_LIMIT {
                    return is_connected(g);
                }
                self.graph(n).is_ok_and(|k| canonical_form(k) == canonical_form(g))
            }
            Spec::Explicit(h) => canonical_form(h) == canonical_form(g),
        }
    }

    pub fn recognize(&self, g: &Graph) -> Option<usize> {
        self.members.iter().map(|m| m.index).find(|&n| self.is_member(n, g))
    }
}

/// `⟨x, n⟩`.
pub fn pair_bits(x: &[bool], n: usize) -> Vec<bool> {
    let b: Vec<bool> =
        if n == 0 { Vec::new() } else { (0..usize::BITS - n.leading_zeros()).rev().map(|i| n >> i & 1 == 1).collect() };
    let mut out = vec![true];
    for part in [x, &b[..]] {
        out.extend(std::iter::repeat_n(true, part.len()));
        out.push(false);
        out.extend_from_slice(part);
    }
    out
}

/// Inverse of [`pair_bits`]; `None` unless the whole string parses.
pub fn unpair_bits(bits: &[bool]) -> Option<(Vec<bool>, usize)> {
    fn field(bits: &[bool]) -> Option<(&[bool], &[bool])> {
        let len = bits.iter().position(|&b| !b)?;
        let rest = &bits[len + 1..];
        (rest.len() >= len).then(|| rest.split_at(len))
    }
    let (&first, rest) = bits.split_first()?;
    if !first {
        return None;
    }
    let (x, rest) = field(rest)?;
    let (b, rest) = field(rest)?;
    if !rest.is_empty() || b.len() > usize::BITS as usize || b.first() == Some(&false) {
        return None;
    }
    let n = b.iter().fold(0usize, |acc, &bit| acc << 1 | usize::from(bit));
    Some((x.to_vec(), n))
}

#[derive(Clone, Debug)]
pub struct UniversalityInstance {
    pub x: Vec<bool>,
    pub kappa: usize,
    /// Even family index of `H_x`.
    pub pattern_index: usize,
    pub pattern_even: Graph,
    /// `G_x`, connected.
    pub target: Graph,
    /// Homomorphism `G_x → H_x`.
    pub target_coloring: Vec<usize>,
    pub normalizer: BigRational,
}

/// A reduction `x ↦ (H_x, G_x)` with `F(x) = g(x) · #Hom(H_x, G_x)`.
pub trait InstanceSource {
    fn family(&self) -> &Family;
    fn kappa(&self, x: &[bool]) -> usize;
    fn normalizer(&self, x: &[bool]) -> Result<BigRational, ReductionError>;
    fn instance(&self, x: &[bool]) -> Result<UniversalityInstance, ReductionError>;
}

/// `H_x` is the even member picked by the number of ones of `x`, `G_x = H_x × K_m`
/// with `m` one or two above the member's witness color count, `κ(x)` the number
/// of leading ones (capped by the family), and `g(x) = 1/#Aut(H_x)` unless `x` has
/// no zero bit, where it vanishes.
#[derive(Debug)]
pub struct TensorToy {
    pub family: Family,
}

impl TensorToy {
    pub fn new(family: Family) -> Self {
        TensorToy { family }
    }

    fn pattern_index(&self, x: &[bool]) -> Result<usize, ReductionError> {
        let evens = self.family.even_indices();
        if evens.is_empty() {
            return Err(ReductionError::BadParameter(format!("family {} has no even index", self.family.name)));
        }
        Ok(evens[x.iter().filter(|&&b| b).count() % evens.len()])
    }

    /// `F(x)` by brute force.
    pub fn answer(&self, x: &[bool]) -> Result<BigRational, ReductionError> {
        let inst = self.instance(x)?;
        let limits = Limits::default().with_pattern_budget(inst.pattern_even.vertex_count());
        let homs = count_maps_with(MapKind::Hom, &inst.pattern_even, &inst.target, None, &limits)?;
        Ok(inst.normalizer * BigRational::from_integer(BigInt::from(homs)))
    }
}

impl InstanceSource for TensorToy {
    fn family(&self) -> &Family {
        &self.family
    }

    fn kappa(&self, x: &[bool]) -> usize {
        let lead = x.iter().take_while(|&&b| b).count();
        lead.min(self.family.max_kappa().unwrap_or(0))
    }

    fn normalizer(&self, x: &[bool]) -> Result<BigRational, ReductionError> {
        if x.iter().all(|&b| b) {
            return Ok(BigRational::zero());
        }
        let aut = self.family.automorphisms(self.pattern_index(x)?)?;
        Ok(BigRational::new(BigInt::one(), BigInt::from(aut)))
    }

    fn instance(&self, x: &[bool]) -> Result<UniversalityInstance, ReductionError> {
        let n = self.pattern_index(x)?;
        let h = self.family.graph(n)?.clone();
        let m = self.family.color_count(n)? + 1 + x.len() % 2;
        let target = tensor_product(&h, &complete(m));
        let target_coloring = (0..target.vertex_count()).map(|v| v / m).collect();
        Ok(UniversalityInstance {
            x: x.to_vec(),
            kappa: self.kappa(x),
            pattern_index: n,
            pattern_even: h,
            target,
            target_coloring,
            normalizer: self.normalizer(x)?,
        })
    }
}

#[derive(Clone, Debug)]
pub struct Encoded {
    pub h_hat: Graph,
    pub g_hat: Graph,
    /// `Ĝ → Ĥ`.
    pub coloring: VertexColoring,
    pub companion_index: usize,
}

/// [`universality_assemble`] after checking the instance invariants.
pub fn universality_encode(inst: &UniversalityInstance, family: &Family) -> Result<Encoded, ReductionError> {
    if inst.normalizer.is_zero() {
        return Err(ReductionError::BadParameter("normalizer vanishes".into()));
    }
    if !inst.pattern_index.is_multiple_of(2) || !family.is_member(inst.pattern_index, &inst.pattern_even) {
        return Err(ReductionError::BadParameter(format!(
            "pattern is not the even member {} of family {}",
            inst.pattern_index, family.name
        )));
    }
    if !is_connected(&inst.target) {
        return Err(ReductionError::BadParameter("target is disconnected".into()));
    }
    universality_assemble(inst, family)
}

/// `(Ĥ, Ĝ)` and the coloring `Ĝ → Ĥ`, without validating the instance.
pub fn universality_assemble(inst: &UniversalityInstance, family: &Family) -> Result<Encoded, ReductionError> {
    let companion_index = 2 * inst.kappa + 3;
    let companion = family.graph(companion_index)?;
    let enc = encode_string(&pair_bits(&inst.x, inst.pattern_index));
    let h = disjoint_union(&[&inst.pattern_even, companion]);
    let g = disjoint_union(&[&inst.target, &enc, companion]);
    let hp = inst.pattern_even.vertex_count();
    let (u, w) = companion.edges().next().expect("companion has an edge");
    let halves = crate::graph::bipartition(&enc).expect("paths are bipartite");
    let mut assignment = inst.target_coloring.clone();
    assignment.extend(halves.iter().map(|&side| hp + if side == 0 { u } else { w }));
    assignment.extend((0..companion.vertex_count()).map(|v| hp + v));
    let coloring = VertexColoring::new(g.graph.clone(), h.graph.clone(), assignment)?;
    Ok(Encoded { h_hat: h.graph, g_hat: g.graph, coloring, companion_index })
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("rejected at step {step}: {reason}")]
pub struct Reject {
    pub step: u8,
    pub reason: String,
}

fn reject<T>(step: u8, reason: impl Into<String>) -> Result<T, Reject> {
    Err(Reject { step, reason: reason.into() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decoded {
    pub x: Vec<bool>,
    pub kappa: usize,
    pub pattern_index: usize,
    pub companion_index: usize,
    pub normalizer: BigRational,
    /// `#Aut(K(2κ+3)) · g(x)⁻¹`.
    pub factor: BigRational,
    /// `F(x) · factor`, when an oracle for `F` was supplied.
    pub count: Option<BigUint>,
}

fn is_path(g: &Graph) -> bool {
    g.is_simple() && g.edge_count() + 1 == g.vertex_count() && g.max_degree() <= 2 && is_connected(g)
}

/// `x ↦ F(x)`.
pub type AnswerOracle<'a> = &'a dyn Fn(&[bool]) -> Result<BigRational, ReductionError>;

/// Recovers the instance behind `(Ĥ, Ĝ)` and, given an oracle for `F`, the count
/// `#Hom(Ĥ, Ĝ)`. Each failed check rejects with its step number.
pub fn universality_decode<S: InstanceSource + ?Sized>(
    h: &Graph,
    g: &Graph,
    source: &S,
    oracle: Option<AnswerOracle<'_>>,
) -> Result<Decoded, Reject> {
    let family = source.family();

    let parts: Vec<Graph> = components(h).iter().map(|c| induced_subgraph(h, c)).collect();
    let ids: Vec<Option<usize>> = parts.iter().map(|p| family.recognize(p)).collect();
    let (a, b) = match ids[..] {
        [Some(p), Some(q)] if p % 2 == 0 && q % 2 == 1 => (p, q),
        [Some(p), Some(q)] if p % 2 == 1 && q % 2 == 0 => (q, p),
        _ => return reject(1, format!("pattern components {ids:?} are not one even and one odd member")),
    };

    let mut path_vertices = Vec::new();
    let mut others = Vec::new();
    for c in components(g) {
        let part = induced_subgraph(g, &c);
        if is_path(&part) {
            path_vertices.extend(c);
        } else {
            others.push(part);
        }
    }
    if others.len() != 2 {
        return reject(2, format!("target has {} components that are not paths", others.len()));
    }

    if !others.iter().any(|o| family.is_member(b, o)) {
        return reject(3, format!("no target component is member {b}"));
    }

    path_vertices.sort_unstable();
    let bits = match decode_string(&induced_subgraph(g, &path_vertices)) {
        Ok(bits) => bits,
        Err(DecodeFailure::Empty) => return reject(4, "no path components"),
        Err(e) => return reject(4, e.to_string()),
    };
    let Some((x, n)) = unpair_bits(&bits) else {
        return reject(4, "path set does not encode a pair");
    };
    if family.member(n).is_err() {
        return reject(4, format!("encoded index {n} is not in family {}", family.name));
    }

    let kappa = source.kappa(&x);
    if 2 * kappa + 3 != b {
        return reject(5, format!("2κ+3 = {} but the companion is member {b}", 2 * kappa + 3));
    }

    if n != a {
        return reject(6, format!("encoded pattern is member {n}, the pattern component is member {a}"));
    }

    let normalizer = match source.normalizer(&x) {
        Ok(v) if !v.is_zero() => v,
        Ok(_) => return reject(7, "normalizer vanishes"),
        Err(e) => return reject(7, e.to_string()),
    };

    let aut = family.automorphisms(b).map_err(|e| Reject { step: 8, reason: e.to_string() })?;
    let factor = BigRational::from_integer(BigInt::from(aut)) / &normalizer;
    let count = match oracle {
        None => None,
        Some(o) => {
            let value = o(&x).map_err(|e| Reject { step: 8, reason: e.to_string() })? * &factor;
            if !value.is_integer() || value.is_negative() {
                return reject(8, format!("oracle answer gives the non-count {value}"));
            }
            Some(value.to_integer().to_biguint().expect("non-negative"))
        }
    };
    Ok(Decoded { x, kappa, pattern_index: a, companion_index: b, normalizer, factor, count })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::bits_from_str;

    #[test]
    fn pairing_roundtrip() {
        for (x, n) in [("", 4), ("0", 6), ("1101", 4), ("000", 10)] {
            let x = bits_from_str(x).unwrap();
            let bits = pair_bits(&x, n);
            assert!(bits[0]);
            assert_eq!(unpair_bits(&bits), Some((x, n)));
        }
        assert_eq!(unpair_bits(&[false]), None);
        let mut long = pair_bits(&[true], 4);
        long.push(true);
        assert_eq!(unpair_bits(&long), None);
    }

    #[test]
    fn kneser_automorphisms_match_search() {
        let f = Family::toy();
        for n in [4, 5, 6, 7] {
            assert_eq!(f.automorphisms(n).unwrap(), automorphism_count(f.graph(n).unwrap()).unwrap(), "member {n}");
        }
    }

    #[test]
    fn toy_roundtrip() {
        let src = TensorToy::new(Family::toy());
        let x = bits_from_str("1010").unwrap();
        let inst = src.instance(&x).unwrap();
        let enc = universality_encode(&inst, &src.family).unwrap();
        assert_eq!(components(&enc.h_hat).len(), 2);
        let d = universality_decode(&enc.h_hat, &enc.g_hat, &src, None).unwrap();
        assert_eq!((d.x, d.kappa), (x, 1));
        assert_eq!(d.companion_index, 5);
    }

    #[test]
    fn family_recognition() {
        let f = Family::toy();
        assert_eq!(f.recognize(&crate::graph::named::petersen()), Some(4));
        assert_eq!(f.recognize(&complete(3)), Some(5));
        assert_eq!(f.recognize(&complete(5)), None);
        assert_eq!(f.max_kappa(), Some(2));
        assert_eq!(Family::antichain().max_kappa(), Some(0));
    }
}
