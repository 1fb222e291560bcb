//! Backtracking over pattern vertices with adjacency-consistency pruning.

use crate::graph::Graph;
use crate::par::{self, Exec};

pub(crate) struct Search<'a> {
    h: &'a Graph,
    g: &'a Graph,
    injective: bool,
    strong: bool,
    /// `allowed[v][w]`: pattern vertex `v` may map to target vertex `w`.
    allowed: Option<Vec<Vec<bool>>>,
    allowed_lists: Option<Vec<Vec<usize>>>,
    /// Target coloring and color count for colorful counting.
    colorful: Option<(&'a [usize], usize)>,
    order: Vec<usize>,
    /// Earlier-placed neighbours of `order[i]`.
    back: Vec<Vec<usize>>,
    /// Earlier-placed non-neighbours of `order[i]` (strong mode only).
    back_non: Vec<Vec<usize>>,
}

struct State {
    phi: Vec<usize>,
    used: Vec<bool>,
    color_uses: Vec<u32>,
    covered: usize,
}

impl<'a> Search<'a> {
    pub fn new(h: &'a Graph, g: &'a Graph) -> Self {
        Search {
            h,
            g,
            injective: false,
            strong: false,
            allowed: None,
            allowed_lists: None,
            colorful: None,
            order: Vec::new(),
            back: Vec::new(),
            back_non: Vec::new(),
        }
    }

    pub fn injective(mut self) -> Self {
        self.injective = true;
        self
    }

    pub fn strong(mut self) -> Self {
        self.injective = true;
        self.strong = true;
        self
    }

    /// Restricts each pattern vertex to a candidate list.
    pub fn restrict(mut self, lists: Vec<Vec<usize>>) -> Self {
        let mut mask = vec![vec![false; self.g.vertex_count()]; self.h.vertex_count()];
        for (v, list) in lists.iter().enumerate() {
            for &w in list {
                mask[v][w] = true;
            }
        }
        self.allowed = Some(mask);
        self.allowed_lists = Some(lists);
        self
    }

    pub fn colorful(mut self, colors: &'a [usize], color_count: usize) -> Self {
        self.colorful = Some((colors, color_count));
        self
    }

    fn prepare(&mut self) {
        let n = self.h.vertex_count();
        let mut placed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut links = vec![0usize; n];
        let size = |v: usize| self.allowed_lists.as_ref().map_or(usize::MAX, |l| l[v].len());
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| (links[v], usize::MAX - size(v), self.h.degree(v), usize::MAX - v))
                .unwrap();
            placed[v] = true;
            order.push(v);
            for &w in self.h.neighbors(v) {
                links[w] += 1;
            }
        }
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        self.back = order
            .iter()
            .enumerate()
            .map(|(i, &v)| self.h.neighbors(v).iter().copied().filter(|&w| pos[w] < i).collect())
            .collect();
        self.back_non = if self.strong {
            order
                .iter()
                .enumerate()
                .map(|(i, &v)| order[..i].iter().copied().filter(|&w| !self.h.has_edge(v, w)).collect())
                .collect()
        } else {
            vec![Vec::new(); n]
        };
        self.order = order;
    }

    fn fresh_state(&self) -> State {
        State {
            phi: vec![usize::MAX; self.h.vertex_count()],
            used: if self.injective { vec![false; self.g.vertex_count()] } else { Vec::new() },
            color_uses: self.colorful.map_or(Vec::new(), |(_, k)| vec![0; k]),
            covered: 0,
        }
    }

    fn candidates(&self, depth: usize, st: &State, out: &mut Vec<usize>) {
        out.clear();
        let v = self.order[depth];
        let back = &self.back[depth];
        let g = self.g;
        let accept = |w: usize| -> bool {
            if self.h.has_loop(v) && !g.has_loop(w) {
                return false;
            }
            if self.strong && g.has_loop(w) && !self.h.has_loop(v) {
                return false;
            }
            if let Some(mask) = &self.allowed {
                if !mask[v][w] {
                    return false;
                }
            }
            if self.injective && st.used[w] {
                return false;
            }
            if back.iter().skip(1).any(|&b| !g.has_edge(st.phi[b], w)) {
                return false;
            }
            if self.back_non[depth].iter().any(|&b| g.has_edge(st.phi[b], w)) {
                return false;
            }
            true
        };
        if let Some(&b0) = back.first() {
            let anchor = st.phi[b0];
            if g.has_loop(anchor) && accept(anchor) {
                out.push(anchor);
            }
            out.extend(g.neighbors(anchor).iter().copied().filter(|&w| accept(w)));
        } else if let Some(lists) = &self.allowed_lists {
            out.extend(lists[v].iter().copied().filter(|&w| accept(w)));
        } else {
            out.extend((0..g.vertex_count()).filter(|&w| accept(w)));
        }
    }

    fn place(&self, depth: usize, w: usize, st: &mut State) {
        let v = self.order[depth];
        st.phi[v] = w;
        if self.injective {
            st.used[w] = true;
        }
        if let Some((colors, _)) = self.colorful {
            let c = colors[w];
            if st.color_uses[c] == 0 {
                st.covered += 1;
            }
            st.color_uses[c] += 1;
        }
    }

    fn unplace(&self, depth: usize, w: usize, st: &mut State) {
        let v = self.order[depth];
        st.phi[v] = usize::MAX;
        if self.injective {
            st.used[w] = false;
        }
        if let Some((colors, _)) = self.colorful {
            let c = colors[w];
            st.color_uses[c] -= 1;
            if st.color_uses[c] == 0 {
                st.covered -= 1;
            }
        }
    }

    fn hopeless(&self, depth: usize, st: &State) -> bool {
        match self.colorful {
            Some((_, k)) => st.covered + (self.order.len() - depth) < k,
            None => false,
        }
    }

    fn count_from(&self, depth: usize, st: &mut State, buf: &mut Vec<Vec<usize>>) -> u128 {
        if self.hopeless(depth, st) {
            return 0;
        }
        if depth == self.order.len() {
            return 1;
        }
        let mut cands = std::mem::take(&mut buf[depth]);
        self.candidates(depth, st, &mut cands);
        let mut total = 0u128;
        if depth + 1 == self.order.len() && self.colorful.is_none() {
            total = cands.len() as u128;
        } else {
            for &w in &cands {
                self.place(depth, w, st);
                total += self.count_from(depth + 1, st, buf);
                self.unplace(depth, w, st);
            }
        }
        buf[depth] = cands;
        total
    }

    pub fn count(mut self, exec: Exec) -> u128 {
        self.prepare();
        let n = self.order.len();
        if n == 0 {
            return 1;
        }
        let mut st = self.fresh_state();
        let mut first = Vec::new();
        self.candidates(0, &st, &mut first);
        if n == 1 {
            if self.colorful.is_some() {
                let mut buf = vec![Vec::new(); 1];
                return first
                    .iter()
                    .map(|&w| {
                        self.place(0, w, &mut st);
                        let c = self.count_from(1, &mut st, &mut buf);
                        self.unplace(0, w, &mut st);
                        c
                    })
                    .sum();
            }
            return first.len() as u128;
        }
        let this = &self;
        par::map(exec, &first, |&w| {
            let mut st = this.fresh_state();
            let mut buf = vec![Vec::new(); n];
            this.place(0, w, &mut st);
            this.count_from(1, &mut st, &mut buf)
        })
        .into_iter()
        .sum()
    }

    /// Some map, if one exists.
    pub fn find(mut self) -> Option<Vec<usize>> {
        self.prepare();
        let mut st = self.fresh_state();
        let mut buf = vec![Vec::new(); self.order.len()];
        self.find_from(0, &mut st, &mut buf).then_some(st.phi)
    }

    fn find_from(&self, depth: usize, st: &mut State, buf: &mut Vec<Vec<usize>>) -> bool {
        if self.hopeless(depth, st) {
            return false;
        }
        if depth == self.order.len() {
            return true;
        }
        let mut cands = std::mem::take(&mut buf[depth]);
        self.candidates(depth, st, &mut cands);
        for &w in &cands {
            self.place(depth, w, st);
            if self.find_from(depth + 1, st, buf) {
                buf[depth] = cands;
                return true;
            }
            self.unplace(depth, w, st);
        }
        buf[depth] = cands;
        false
    }

    /// Calls `f` on every map, in search order, until it returns false.
    pub fn for_each(mut self, f: &mut dyn FnMut(&[usize]) -> bool) {
        self.prepare();
        let mut st = self.fresh_state();
        let mut buf = vec![Vec::new(); self.order.len()];
        self.each_from(0, &mut st, &mut buf, f);
    }

    fn each_from(
        &self,
        depth: usize,
        st: &mut State,
        buf: &mut Vec<Vec<usize>>,
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if self.hopeless(depth, st) {
            return true;
        }
        if depth == self.order.len() {
            return f(&st.phi);
        }
        let mut cands = std::mem::take(&mut buf[depth]);
        self.candidates(depth, st, &mut cands);
        let mut go_on = true;
        for &w in &cands {
            self.place(depth, w, st);
            go_on = self.each_from(depth + 1, st, buf, f);
            self.unplace(depth, w, st);
            if !go_on {
                break;
            }
        }
        buf[depth] = cands;
        go_on
    }
}
