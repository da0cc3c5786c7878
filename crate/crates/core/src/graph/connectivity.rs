//! Vertex connectivity through Menger's theorem: the number of internally
//! disjoint `s`-`t` paths is a unit-vertex-capacity max flow.

use super::Graph;
use std::collections::VecDeque;

struct FlowNetwork {
    head: Vec<usize>,
    next: Vec<usize>,
    to: Vec<usize>,
    cap: Vec<u32>,
}

const NIL: usize = usize::MAX;

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork { head: vec![NIL; nodes], next: Vec::new(), to: Vec::new(), cap: Vec::new() }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        for (a, b, c) in [(from, to, cap), (to, from, 0)] {
            self.next.push(self.head[a]);
            self.head[a] = self.to.len();
            self.to.push(b);
            self.cap.push(c);
        }
    }

    /// Augments along shortest paths until `limit` units flow or none remain.
    fn max_flow(&mut self, source: usize, sink: usize, limit: usize) -> usize {
        let mut flow = 0;
        let mut via = vec![NIL; self.head.len()];
        while flow < limit {
            via.iter_mut().for_each(|x| *x = NIL);
            let mut queue = VecDeque::from([source]);
            let mut reached = false;
            while let Some(u) = queue.pop_front() {
                let mut e = self.head[u];
                while e != NIL {
                    let v = self.to[e];
                    if self.cap[e] > 0 && v != source && via[v] == NIL {
                        via[v] = e;
                        if v == sink {
                            reached = true;
                            break;
                        }
                        queue.push_back(v);
                    }
                    e = self.next[e];
                }
                if reached {
                    break;
                }
            }
            if !reached {
                break;
            }
            let mut v = sink;
            while v != source {
                let e = via[v];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                v = self.to[e ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

/// Maximum number of internally vertex-disjoint `s`-`t` paths, stopping early
/// once `limit` is reached. `s` and `t` must be distinct and non-adjacent.
pub fn local_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    assert!(s != t && !g.is_adjacent(s, t), "local connectivity needs distinct non-adjacent vertices");
    let n = g.vertex_count();
    let big = n as u32 + 1;
    // vertex v splits into v_in = 2v and v_out = 2v + 1
    let mut net = FlowNetwork::new(2 * n);
    for v in 0..n {
        let cap = if v == s || v == t { big } else { 1 };
        net.add_arc(2 * v, 2 * v + 1, cap);
    }
    for (u, v) in g.edges() {
        net.add_arc(2 * u + 1, 2 * v, big);
        net.add_arc(2 * v + 1, 2 * u, big);
    }
    net.max_flow(2 * s + 1, 2 * t, limit)
}

/// `min(κ(g), cap)`.
///
/// Uses Even's scheme: with vertices in index order, some vertex among the
/// first `κ + 1` avoids a minimum separator and is separated by it from a
/// later vertex, so only pairs `(i, j)` with `i <= current best` and `j > i`
/// need a flow computation.
pub fn vertex_connectivity_capped(g: &Graph, cap: usize) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    if g.is_complete() {
        return (n - 1).min(cap);
    }
    let mut best = g.min_degree().min(cap);
    let mut i = 0;
    while i <= best && i < n {
        for j in i + 1..n {
            if best == 0 {
                return 0;
            }
            if !g.is_adjacent(i, j) {
                best = best.min(local_connectivity(g, i, j, best));
            }
        }
        i += 1;
    }
    best
}

/// Vertex connectivity; `n - 1` for the complete graph `K_n`.
pub fn vertex_connectivity(g: &Graph) -> usize {
    vertex_connectivity_capped(g, usize::MAX)
}

#[cfg(test)]
mod tests {
    use super::super::{complete, complete_multipartite, path};
    use super::*;
    use proptest::prelude::*;

    /// Smallest vertex set whose removal leaves a disconnected graph on at
    /// least two vertices; `n - 1` when no such set exists.
    fn brute_force_connectivity(g: &Graph) -> usize {
        let n = g.vertex_count();
        let mut best = n.saturating_sub(1);
        for mask in 0u32..(1 << n) {
            let removed = mask.count_ones() as usize;
            if removed >= best || n - removed < 2 {
                continue;
            }
            let keep: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) == 0).collect();
            let mut seen = vec![false; n];
            let mut stack = vec![keep[0]];
            seen[keep[0]] = true;
            while let Some(u) = stack.pop() {
                for w in g.neighbor_iter(u) {
                    if mask & (1 << w) == 0 && !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            if keep.iter().any(|&v| !seen[v]) {
                best = removed;
            }
        }
        best
    }

    #[test]
    fn examples() {
        assert_eq!(vertex_connectivity(&complete(5)), 4);
        assert_eq!(vertex_connectivity(&complete_multipartite(&[1, 1, 1, 2])), 3);
        assert_eq!(vertex_connectivity(&path(3)), 1);
        assert_eq!(vertex_connectivity(&complete(1)), 0);
        assert_eq!(vertex_connectivity(&Graph::unlabeled(4, [(0, 1), (2, 3)]).unwrap()), 0);
        let c6 = Graph::unlabeled(6, (0..6).map(|v| (v, (v + 1) % 6))).unwrap();
        assert_eq!(vertex_connectivity(&c6), 2);
        assert_eq!(vertex_connectivity_capped(&complete(9), 3), 3);
    }

    #[test]
    fn local_connectivity_counts_paths() {
        let c6 = Graph::unlabeled(6, (0..6).map(|v| (v, (v + 1) % 6))).unwrap();
        assert_eq!(local_connectivity(&c6, 0, 3, usize::MAX), 2);
        assert_eq!(local_connectivity(&c6, 0, 3, 1), 1);
    }

    proptest! {
        #[test]
        fn multipartite_connectivity(parts in prop::collection::vec(1usize..6, 2..7)) {
            let total: usize = parts.iter().sum();
            prop_assume!(total <= 30);
            let g = complete_multipartite(&parts);
            let expected = total - parts.iter().max().unwrap();
            prop_assert_eq!(vertex_connectivity(&g), expected);
            if total <= 12 {
                prop_assert_eq!(brute_force_connectivity(&g), expected);
            }
        }

        #[test]
        fn matches_brute_force(n in 2usize..=10, bits in prop::collection::vec(any::<bool>(), 45)) {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k % bits.len()] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            let g = Graph::unlabeled(n, edges).unwrap();
            prop_assert_eq!(vertex_connectivity(&g), brute_force_connectivity(&g));
        }
    }
}
