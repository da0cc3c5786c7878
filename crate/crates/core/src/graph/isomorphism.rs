//! Isomorphism search producing an explicit vertex bijection.
//!
//! Both graphs are first colour-refined together (1-dimensional
//! Weisfeiler-Leman, seeded by degree); differing colour histograms refute
//! isomorphism outright. Otherwise a backtracking search assigns vertices of
//! the first graph to same-coloured vertices of the second, keeping a
//! candidate bitset per unassigned vertex (forward checking) and always
//! branching on the smallest domain.

use super::{Graph, GraphError};
use fixedbitset::FixedBitSet;
use std::collections::{BTreeMap, BTreeSet};

pub const DEFAULT_NODE_BUDGET: u64 = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Isomorphism {
    /// `mapping[v]` is the image in the second graph of vertex `v` of the first.
    Found(Vec<usize>),
    NotIsomorphic,
}

pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> Result<Isomorphism, GraphError> {
    are_isomorphic_with_budget(g1, g2, DEFAULT_NODE_BUDGET)
}

pub fn are_isomorphic_with_budget(
    g1: &Graph,
    g2: &Graph,
    budget: u64,
) -> Result<Isomorphism, GraphError> {
    let n = g1.vertex_count();
    if n != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(Isomorphism::NotIsomorphic);
    }
    let (c1, c2) = refine_jointly(g1, g2);
    let histogram = |c: &[usize]| {
        let mut h = c.to_vec();
        h.sort_unstable();
        h
    };
    if histogram(&c1) != histogram(&c2) {
        return Ok(Isomorphism::NotIsomorphic);
    }
    if n == 0 {
        return Ok(Isomorphism::Found(Vec::new()));
    }

    let non_adj2: Vec<FixedBitSet> = (0..n)
        .map(|v| {
            let mut s = g2.neighbors(v).clone();
            s.toggle_range(..);
            s.set(v, false);
            s
        })
        .collect();
    let domains: Vec<FixedBitSet> = (0..n)
        .map(|u| {
            let mut d = FixedBitSet::with_capacity(n);
            (0..n).filter(|&v| c2[v] == c1[u]).for_each(|v| d.insert(v));
            d
        })
        .collect();

    let mut search = Search { g1, g2, non_adj2, mapping: vec![usize::MAX; n], nodes: 0, budget };
    if search.extend(domains, n)? {
        debug_assert!(is_isomorphism(g1, g2, &search.mapping));
        Ok(Isomorphism::Found(search.mapping))
    } else {
        Ok(Isomorphism::NotIsomorphic)
    }
}

/// Checks that `mapping` is a bijection preserving adjacency and non-adjacency.
pub fn is_isomorphism(g1: &Graph, g2: &Graph, mapping: &[usize]) -> bool {
    let n = g1.vertex_count();
    if n != g2.vertex_count() || mapping.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &m in mapping {
        if m >= n || std::mem::replace(&mut hit[m], true) {
            return false;
        }
    }
    (0..n).all(|u| (u + 1..n).all(|v| g1.is_adjacent(u, v) == g2.is_adjacent(mapping[u], mapping[v])))
}

/// Stable colourings of both graphs under a shared colour namespace.
fn refine_jointly(g1: &Graph, g2: &Graph) -> (Vec<usize>, Vec<usize>) {
    let mut c1 = g1.degrees();
    let mut c2 = g2.degrees();
    let mut classes = 0;
    loop {
        let signature = |g: &Graph, c: &[usize], v: usize| {
            let mut nb: Vec<usize> = g.neighbor_iter(v).map(|w| c[w]).collect();
            nb.sort_unstable();
            (c[v], nb)
        };
        let s1: Vec<_> = (0..g1.vertex_count()).map(|v| signature(g1, &c1, v)).collect();
        let s2: Vec<_> = (0..g2.vertex_count()).map(|v| signature(g2, &c2, v)).collect();
        // ranks in sorted signature order, so colours do not depend on argument order
        let ranks: BTreeMap<_, usize> = s1
            .iter()
            .chain(s2.iter())
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .enumerate()
            .map(|(i, k)| (k, i))
            .collect();
        c1 = s1.iter().map(|s| ranks[s]).collect();
        c2 = s2.iter().map(|s| ranks[s]).collect();
        if ranks.len() == classes {
            return (c1, c2);
        }
        classes = ranks.len();
    }
}

struct Search<'a> {
    g1: &'a Graph,
    g2: &'a Graph,
    non_adj2: Vec<FixedBitSet>,
    mapping: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn extend(&mut self, domains: Vec<FixedBitSet>, unassigned: usize) -> Result<bool, GraphError> {
        if unassigned == 0 {
            return Ok(true);
        }
        let u = (0..domains.len())
            .filter(|&u| self.mapping[u] == usize::MAX)
            .min_by_key(|&u| domains[u].count_ones(..))
            .expect("an unassigned vertex exists");
        for v in domains[u].ones() {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(GraphError::SearchBudgetExceeded { budget: self.budget });
            }
            let mut next = domains.clone();
            let mut dead = false;
            for w in 0..next.len() {
                if w == u || self.mapping[w] != usize::MAX {
                    continue;
                }
                if self.g1.is_adjacent(u, w) {
                    next[w].intersect_with(self.g2.neighbors(v));
                } else {
                    next[w].intersect_with(&self.non_adj2[v]);
                }
                if next[w].is_clear() {
                    dead = true;
                    break;
                }
            }
            if dead {
                continue;
            }
            self.mapping[u] = v;
            if self.extend(next, unassigned - 1)? {
                return Ok(true);
            }
            self.mapping[u] = usize::MAX;
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::super::{complete_multipartite, edgeless, johnson, lexicographic_product};
    use super::*;
    use proptest::prelude::*;

    fn next_permutation(p: &mut [usize]) -> bool {
        let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else { return false };
        let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
        true
    }

    fn brute_force_isomorphic(g1: &Graph, g2: &Graph) -> bool {
        let n = g1.vertex_count();
        if n != g2.vertex_count() {
            return false;
        }
        let mut p: Vec<usize> = (0..n).collect();
        loop {
            if is_isomorphism(g1, g2, &p) {
                return true;
            }
            if !next_permutation(&mut p) {
                return false;
            }
        }
    }

    fn random_graph(n: usize, bits: &[bool]) -> Graph {
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
        Graph::unlabeled(n, edges).unwrap()
    }

    #[test]
    fn octahedron_is_not_hexagon() {
        let oct = complete_multipartite(&[2, 2, 2]);
        let c6 = Graph::unlabeled(6, (0..6).map(|v| (v, (v + 1) % 6))).unwrap();
        assert_eq!(are_isomorphic(&oct, &c6), Ok(Isomorphism::NotIsomorphic));
    }

    #[test]
    fn shuffled_johnson_product() {
        let g = lexicographic_product(&johnson(6, 2).unwrap(), &edgeless(2));
        let perm: Vec<usize> = (0..30).map(|v| (v * 7 + 3) % 30).collect();
        let h = g.permuted(&perm);
        match are_isomorphic(&g, &h).unwrap() {
            Isomorphism::Found(m) => assert!(is_isomorphism(&g, &h, &m)),
            Isomorphism::NotIsomorphic => panic!("expected an isomorphism"),
        }
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let g = lexicographic_product(&johnson(6, 2).unwrap(), &edgeless(2));
        assert_eq!(
            are_isomorphic_with_budget(&g, &g, 3),
            Err(GraphError::SearchBudgetExceeded { budget: 3 })
        );
    }

    #[test]
    fn regular_non_isomorphic_pair() {
        // two triangles vs a hexagon: both 2-regular on 6 vertices
        let tri = Graph::unlabeled(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let c6 = Graph::unlabeled(6, (0..6).map(|v| (v, (v + 1) % 6))).unwrap();
        assert_eq!(are_isomorphic(&tri, &c6), Ok(Isomorphism::NotIsomorphic));
    }

    proptest! {
        #[test]
        fn finds_mapping_for_relabelled_graph(
            n in 1usize..=20,
            bits in prop::collection::vec(any::<bool>(), 1..200),
            seed in any::<u64>(),
        ) {
            let g = random_graph(n, &bits);
            let mut perm: Vec<usize> = (0..n).collect();
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (s >> 33) as usize % (i + 1));
            }
            let h = g.permuted(&perm);
            match are_isomorphic(&g, &h).unwrap() {
                Isomorphism::Found(m) => prop_assert!(is_isomorphism(&g, &h, &m)),
                Isomorphism::NotIsomorphic => prop_assert!(false, "missed isomorphism"),
            }
        }

    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(96))]

        #[test]
        fn agrees_with_brute_force(
            n in 1usize..=8,
            a in prop::collection::vec(any::<bool>(), 28),
            b in prop::collection::vec(any::<bool>(), 28),
        ) {
            let (g1, g2) = (random_graph(n, &a), random_graph(n, &b));
            let found = matches!(are_isomorphic(&g1, &g2).unwrap(), Isomorphism::Found(_));
            prop_assert_eq!(found, brute_force_isomorphic(&g1, &g2));
            let mut d1 = g1.degrees();
            let mut d2 = g2.degrees();
            d1.sort_unstable();
            d2.sort_unstable();
            if d1 != d2 {
                prop_assert!(!found);
            }
        }
    }
}
