//! Maximum matchings by exhaustive augmenting-path search.

use crate::graph::Graph;

pub const MATCHING_VERTEX_LIMIT: usize = 64;

/// Size of a largest matching. Repeatedly augments along a simple alternating
/// path found by full backtracking, so no blossom handling is needed.
///
/// # Panics
/// If `g` has more than [`MATCHING_VERTEX_LIMIT`] vertices.
pub fn matching_number(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!(n <= MATCHING_VERTEX_LIMIT, "matching search supports at most 64 vertices");
    let mut mate = vec![usize::MAX; n];
    // Greedy start.
    for (u, v) in g.edges() {
        if mate[u] == usize::MAX && mate[v] == usize::MAX {
            mate[u] = v;
            mate[v] = u;
        }
    }
    loop {
        let mut improved = false;
        for s in 0..n {
            if mate[s] != usize::MAX || g.degree(s) == 0 {
                continue;
            }
            let mut path = vec![s];
            if augment(g, &mate, &mut path, 1u64 << s) {
                for pair in path.chunks(2) {
                    mate[pair[0]] = pair[1];
                    mate[pair[1]] = pair[0];
                }
                improved = true;
            }
        }
        if !improved {
            break;
        }
    }
    mate.iter().filter(|&&m| m != usize::MAX).count() / 2
}

/// Extends the alternating path (even length so far, ends at a vertex that
/// must leave by a non-matching edge) until it reaches a free vertex.
fn augment(g: &Graph, mate: &[usize], path: &mut Vec<usize>, seen: u64) -> bool {
    let u = *path.last().unwrap();
    for &w in g.neighbors(u) {
        if seen >> w & 1 == 1 || mate[u] == w {
            continue;
        }
        if mate[w] == usize::MAX {
            path.push(w);
            return true;
        }
        let m = mate[w];
        if seen >> m & 1 == 1 {
            continue;
        }
        path.push(w);
        path.push(m);
        if augment(g, mate, path, seen | 1 << w | 1 << m) {
            return true;
        }
        path.truncate(path.len() - 2);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn small_values() {
        assert_eq!(matching_number(&complete(4)), 2);
        assert_eq!(matching_number(&star(5)), 1);
        assert_eq!(matching_number(&cycle(7)), 3);
        assert_eq!(matching_number(&petersen()), 5);
        assert_eq!(matching_number(&Graph::empty(3)), 0);
    }

    #[test]
    fn greedy_start_is_repaired() {
        // Path a-b-c-d where the greedy pass takes b-c first.
        let g = Graph::from_edges(4, [(1, 2), (0, 1), (2, 3)]).unwrap();
        assert_eq!(matching_number(&g), 2);
    }
}
