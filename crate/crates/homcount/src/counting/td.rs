//! Tree decompositions and the homomorphism-counting dynamic program over them.

use super::CountError;
use crate::graph::Graph;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::collections::HashMap;

/// Counts keyed by the images of a bag's shared vertices.
type Table = HashMap<Vec<usize>, BigUint>;

pub const EXACT_TREEWIDTH_LIMIT: usize = 15;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub bags: Vec<Vec<usize>>,
    pub parent: Vec<Option<usize>>,
    /// True when the width is the treewidth.
    pub exact: bool,
}

impl TreeDecomposition {
    /// Largest bag size minus one; zero for decompositions with only empty bags.
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0).saturating_sub(1)
    }

    pub fn validate(&self, h: &Graph) -> Result<(), CountError> {
        let bad = |m: String| Err(CountError::InvalidDecomposition(m));
        let k = self.bags.len();
        if self.parent.len() != k {
            return bad("parent table and bag table differ in length".into());
        }
        if k == 0 {
            return if h.vertex_count() == 0 { Ok(()) } else { bad("no bags".into()) };
        }
        for (t, p) in self.parent.iter().enumerate() {
            if let Some(p) = *p {
                if p >= k {
                    return bad(format!("node {t} has parent {p} out of range"));
                }
            }
            let mut steps = 0;
            let mut cur = t;
            while let Some(p) = self.parent[cur] {
                cur = p;
                steps += 1;
                if steps > k {
                    return bad("parent links contain a cycle".into());
                }
            }
        }
        for b in &self.bags {
            if b.iter().any(|&v| v >= h.vertex_count()) {
                return bad("bag mentions a vertex outside the graph".into());
            }
        }
        for v in 0..h.vertex_count() {
            let holders: Vec<usize> = (0..k).filter(|&t| self.bags[t].contains(&v)).collect();
            if holders.is_empty() {
                return bad(format!("vertex {v} is in no bag"));
            }
            // Connected iff exactly one holder has a parent outside the holder set.
            let tops = holders.iter().filter(|&&t| self.parent[t].is_none_or(|p| !self.bags[p].contains(&v))).count();
            if tops != 1 {
                return bad(format!("bags holding vertex {v} are not connected"));
            }
        }
        for (u, v) in h.edges() {
            if !self.bags.iter().any(|b| b.contains(&u) && b.contains(&v)) {
                return bad(format!("edge {{{u},{v}}} is in no bag"));
            }
        }
        Ok(())
    }
}

/// Exact for at most [`EXACT_TREEWIDTH_LIMIT`] vertices; min-fill above.
pub fn tree_decomposition(g: &Graph) -> TreeDecomposition {
    let n = g.vertex_count();
    if n == 0 {
        return TreeDecomposition { bags: vec![Vec::new()], parent: vec![None], exact: true };
    }
    let (order, exact) = if n <= EXACT_TREEWIDTH_LIMIT { (exact_order(g), true) } else { (min_fill_order(g), false) };
    from_elimination_order(g, &order, exact)
}

pub fn treewidth(g: &Graph) -> usize {
    tree_decomposition(g).width()
}

fn masks(g: &Graph) -> Vec<u32> {
    (0..g.vertex_count()).map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w))).collect()
}

/// Vertices outside `s ∪ {v}` reachable from `v` through `s`.
fn q_set(adj: &[u32], s: u32, v: usize) -> u32 {
    let mut seen = 1u32 << v;
    let mut frontier = 1u32 << v;
    let mut reach = 0u32;
    while frontier != 0 {
        let x = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let nb = adj[x] & !seen;
        seen |= nb;
        reach |= nb & !s;
        frontier |= nb & s;
    }
    reach
}

fn exact_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let adj = masks(g);
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut tw = vec![u8::MAX; 1 << n];
    let mut choice = vec![0u8; 1 << n];
    tw[0] = 0;
    for s in 1..=full {
        let mut best = u8::MAX;
        let mut arg = 0;
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let rest = s & !(1 << v);
            let q = q_set(&adj, rest, v).count_ones() as u8;
            let cand = tw[rest as usize].max(q);
            if cand < best {
                best = cand;
                arg = v as u8;
            }
        }
        tw[s as usize] = best;
        choice[s as usize] = arg;
    }
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let v = choice[s as usize] as usize;
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();
    order
}

fn min_fill_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut nb: Vec<std::collections::BTreeSet<usize>> =
        (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let fill = |v: usize| {
            let list: Vec<usize> = nb[v].iter().copied().collect();
            let mut missing = 0;
            for i in 0..list.len() {
                for j in i + 1..list.len() {
                    if !nb[list[i]].contains(&list[j]) {
                        missing += 1;
                    }
                }
            }
            missing
        };
        let v = (0..n).filter(|&v| alive[v]).min_by_key(|&v| (fill(v), nb[v].len(), v)).unwrap();
        let list: Vec<usize> = nb[v].iter().copied().collect();
        for &a in &list {
            nb[a].remove(&v);
            for &b in &list {
                if a != b {
                    nb[a].insert(b);
                }
            }
        }
        alive[v] = false;
        order.push(v);
    }
    order
}

fn from_elimination_order(g: &Graph, order: &[usize], exact: bool) -> TreeDecomposition {
    let n = g.vertex_count();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut nb: Vec<std::collections::BTreeSet<usize>> =
        (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut bags = Vec::with_capacity(n);
    let mut parent = vec![None; n];
    for (i, &v) in order.iter().enumerate() {
        let later: Vec<usize> = nb[v].iter().copied().filter(|&w| pos[w] > i).collect();
        for &a in &later {
            for &b in &later {
                if a != b {
                    nb[a].insert(b);
                }
            }
        }
        parent[i] = later.iter().map(|&w| pos[w]).min();
        let mut bag = later;
        bag.push(v);
        bag.sort_unstable();
        bags.push(bag);
    }
    let roots: Vec<usize> = (0..n).filter(|&i| parent[i].is_none()).collect();
    for w in roots.windows(2) {
        parent[w[0]] = Some(w[1]);
    }
    TreeDecomposition { bags, parent, exact }
}

/// Counts homomorphisms `h → g` by dynamic programming over `td`.
pub fn count_homs_td(h: &Graph, td: &TreeDecomposition, g: &Graph) -> Result<BigUint, CountError> {
    if !h.is_simple() {
        return Err(CountError::InvalidDecomposition("pattern must be loop-free".into()));
    }
    td.validate(h)?;
    if h.vertex_count() == 0 {
        return Ok(BigUint::one());
    }
    let k = td.bags.len();
    let mut children = vec![Vec::new(); k];
    let mut roots = Vec::new();
    for t in 0..k {
        match td.parent[t] {
            Some(p) => children[p].push(t),
            None => roots.push(t),
        }
    }
    let mut post = Vec::with_capacity(k);
    let mut stack: Vec<(usize, bool)> = roots.iter().map(|&r| (r, false)).collect();
    while let Some((t, expanded)) = stack.pop() {
        if expanded {
            post.push(t);
        } else {
            stack.push((t, true));
            stack.extend(children[t].iter().map(|&c| (c, false)));
        }
    }
    let mut tables: Vec<Option<Table>> = vec![None; k];
    for &t in &post {
        let bag = &td.bags[t];
        let projections: Vec<(Vec<usize>, Table)> = children[t]
            .iter()
            .map(|&c| {
                let cb = &td.bags[c];
                let shared_in_child: Vec<usize> = (0..cb.len()).filter(|&i| bag.contains(&cb[i])).collect();
                let shared_in_parent: Vec<usize> =
                    shared_in_child.iter().map(|&i| bag.iter().position(|&x| x == cb[i]).unwrap()).collect();
                let mut proj: HashMap<Vec<usize>, BigUint> = HashMap::new();
                for (assign, val) in tables[c].take().unwrap() {
                    let key: Vec<usize> = shared_in_child.iter().map(|&i| assign[i]).collect();
                    *proj.entry(key).or_default() += val;
                }
                (shared_in_parent, proj)
            })
            .collect();
        let mut table = HashMap::new();
        for_each_bag_assignment(h, g, bag, &mut |assign| {
            let mut val = BigUint::one();
            for (idx, proj) in &projections {
                let key: Vec<usize> = idx.iter().map(|&i| assign[i]).collect();
                match proj.get(&key) {
                    Some(x) => val *= x,
                    None => return,
                }
            }
            table.insert(assign.to_vec(), val);
        });
        tables[t] = Some(table);
    }
    let mut total = BigUint::one();
    for &r in &roots {
        let s: BigUint = tables[r].take().unwrap().into_values().sum();
        if s.is_zero() {
            return Ok(s);
        }
        total *= s;
    }
    Ok(total)
}

fn for_each_bag_assignment(h: &Graph, g: &Graph, bag: &[usize], f: &mut dyn FnMut(&[usize])) {
    let back: Vec<Vec<usize>> =
        (0..bag.len()).map(|i| (0..i).filter(|&j| h.has_edge(bag[i], bag[j])).collect()).collect();
    let mut assign = vec![0usize; bag.len()];
    fn go(i: usize, g: &Graph, back: &[Vec<usize>], assign: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if i == assign.len() {
            f(assign);
            return;
        }
        let ok = |w: usize, assign: &[usize]| back[i].iter().all(|&j| g.has_edge(assign[j], w));
        match back[i].first() {
            Some(&j) => {
                let anchor = assign[j];
                let mut cands: Vec<usize> = g.neighbors(anchor).to_vec();
                if g.has_loop(anchor) {
                    cands.push(anchor);
                }
                for w in cands {
                    if ok(w, assign) {
                        assign[i] = w;
                        go(i + 1, g, back, assign, f);
                    }
                }
            }
            None => {
                for w in 0..g.vertex_count() {
                    assign[i] = w;
                    go(i + 1, g, back, assign, f);
                }
            }
        }
    }
    go(0, g, &back, &mut assign, f);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::count_homs;
    use crate::generators::grid;
    use crate::graph::named::*;

    #[test]
    fn widths() {
        assert_eq!(treewidth(&path(5)), 1);
        assert_eq!(treewidth(&star(4)), 1);
        assert_eq!(treewidth(&cycle(6)), 2);
        assert_eq!(treewidth(&complete(5)), 4);
        assert_eq!(treewidth(&grid(3).graph), 3);
        assert_eq!(treewidth(&petersen()), 4);
        assert_eq!(treewidth(&Graph::empty(3)), 0);
    }

    #[test]
    fn decompositions_validate() {
        for g in [petersen(), grotzsch(), cycle(17), Graph::empty(4), complete(6)] {
            let td = tree_decomposition(&g);
            td.validate(&g).unwrap();
        }
    }

    #[test]
    fn dp_matches_brute_force() {
        let p3 = path(3);
        let td = tree_decomposition(&p3);
        assert_eq!(td.width(), 1);
        assert_eq!(count_homs_td(&p3, &td, &complete(3)).unwrap(), BigUint::from(24u32));
        for (h, g) in [(cycle(4), cycle(4)), (cycle(5), petersen()), (complete(1), cycle(7))] {
            let td = tree_decomposition(&h);
            assert_eq!(count_homs_td(&h, &td, &g).unwrap(), count_homs(&h, &g).unwrap());
        }
        let two = Graph::from_edges(5, [(0, 1), (2, 3)]).unwrap();
        let td = tree_decomposition(&two);
        assert_eq!(count_homs_td(&two, &td, &petersen()).unwrap(), count_homs(&two, &petersen()).unwrap());
    }

    #[test]
    fn invalid_decomposition_rejected() {
        let c = cycle(4);
        let td = TreeDecomposition { bags: vec![vec![0, 1], vec![2, 3]], parent: vec![None, Some(0)], exact: false };
        assert!(matches!(count_homs_td(&c, &td, &c), Err(CountError::InvalidDecomposition(_))));
    }
}
