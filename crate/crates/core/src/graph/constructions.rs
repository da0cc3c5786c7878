use super::{default_labels, Graph, GraphError};

pub fn complete(n: usize) -> Graph {
    Graph::from_fn(default_labels(n), |_, _| true).expect("valid labels")
}

pub fn edgeless(n: usize) -> Graph {
    Graph::unlabeled(n, []).expect("valid labels")
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    Graph::unlabeled(n, (1..n).map(|v| (v - 1, v))).expect("valid path")
}

/// Complete multipartite graph with the given part sizes. Vertices are laid
/// out part by part and labelled `(part,index)`, both 0-based.
pub fn complete_multipartite(part_sizes: &[usize]) -> Graph {
    let part_of: Vec<usize> =
        part_sizes.iter().enumerate().flat_map(|(p, &size)| std::iter::repeat_n(p, size)).collect();
    let labels = part_sizes
        .iter()
        .enumerate()
        .flat_map(|(p, &size)| (0..size).map(move |i| format!("({p},{i})")))
        .collect();
    Graph::from_fn(labels, |u, v| part_of[u] != part_of[v]).expect("distinct labels")
}

/// `base ∘ fiber`: `(b, f) ~ (b', f')` iff `b ~ b'`, or `b = b'` and `f ~ f'`.
/// Vertex `(b, f)` has index `b * |fiber| + f`.
pub fn lexicographic_product(base: &Graph, fiber: &Graph) -> Graph {
    let k = fiber.vertex_count();
    let labels = (0..base.vertex_count() * k)
        .map(|v| format!("({},{})", base.label(v / k), fiber.label(v % k)))
        .collect();
    Graph::from_fn(labels, |u, v| {
        let (bu, fu, bv, fv) = (u / k, u % k, v / k, v % k);
        base.is_adjacent(bu, bv) || (bu == bv && fiber.is_adjacent(fu, fv))
    })
    .expect("pair labels are distinct")
}

pub fn complement(g: &Graph) -> Graph {
    Graph::from_fn(g.labels().to_vec(), |u, v| !g.is_adjacent(u, v)).expect("labels unchanged")
}

/// k-subsets of `{1..n}` listed in colexicographic order.
pub(crate) fn colex_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(max: usize, k: usize, out: &mut Vec<Vec<usize>>) {
        // subsets with largest element <= max, in colex order
        if k == 0 {
            out.push(Vec::new());
            return;
        }
        for top in k..=max {
            let mut smaller = Vec::new();
            rec(top - 1, k - 1, &mut smaller);
            for mut s in smaller {
                s.push(top);
                out.push(s);
            }
        }
    }
    let mut out = Vec::new();
    rec(n, k, &mut out);
    out
}

/// Johnson graph `J(n, k)`: k-subsets of `{1..n}` in colex order, adjacent when
/// they share exactly `k - 1` elements. Labels look like `{1,3}`.
pub fn johnson(n: usize, k: usize) -> Result<Graph, GraphError> {
    if k == 0 || k > n {
        return Err(GraphError::InvalidSpec(format!("johnson graph needs 1 <= k <= n, got n={n}, k={k}")));
    }
    let subsets = colex_subsets(n, k);
    let labels = subsets
        .iter()
        .map(|s| format!("{{{}}}", s.iter().map(usize::to_string).collect::<Vec<_>>().join(",")))
        .collect();
    Graph::from_fn(labels, |u, v| {
        let common = subsets[u].iter().filter(|x| subsets[v].contains(x)).count();
        common + 1 == k
    })
}

/// If the complement of `g` is a disjoint union of cliques, their sizes in
/// ascending order.
pub fn detect_complete_multipartite(g: &Graph) -> Result<Vec<usize>, GraphError> {
    let n = g.vertex_count();
    let mut assigned = vec![false; n];
    let mut sizes = Vec::new();
    for v in 0..n {
        if assigned[v] {
            continue;
        }
        let class: Vec<usize> = (0..n).filter(|&u| u == v || !g.is_adjacent(u, v)).collect();
        for &u in &class {
            // every member must see exactly the same non-neighbourhood
            let same = (0..n).all(|w| (w == u || !g.is_adjacent(u, w)) == class.contains(&w));
            if assigned[u] || !same {
                return Err(GraphError::NotMultipartite);
            }
            assigned[u] = true;
        }
        sizes.push(class.len());
    }
    sizes.sort_unstable();
    Ok(sizes)
}

/// Parameters `(l, m, n)` of `K_{m[l], ln}`: `m` parts of size `l` plus one
/// part of size `l * n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartitionSpec {
    l: usize,
    m: usize,
    n: usize,
}

impl PartitionSpec {
    pub fn new(l: usize, m: usize, n: usize) -> Result<Self, GraphError> {
        if l == 0 || m == 0 || n == 0 {
            return Err(GraphError::InvalidSpec("l, m and n must be positive".into()));
        }
        if m < n + 1 {
            return Err(GraphError::InvalidSpec(format!("m >= n + 1 violated (m={m}, n={n})")));
        }
        if l * m * n == 2 {
            return Err(GraphError::InvalidSpec(format!("lmn = 2 is excluded (l={l}, m={m}, n={n})")));
        }
        Ok(PartitionSpec { l, m, n })
    }

    /// Reads the spec off sorted part sizes, if they have the shape
    /// `[l; m] + [l*n]` satisfying the constraints of [`PartitionSpec::new`].
    pub fn from_part_sizes(sizes: &[usize]) -> Option<Self> {
        let (&big, small) = sizes.split_last()?;
        let &l = small.first()?;
        if small.iter().any(|&s| s != l) || big % l != 0 {
            return None;
        }
        PartitionSpec::new(l, small.len(), big / l).ok()
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn part_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![self.l; self.m];
        sizes.push(self.l * self.n);
        sizes
    }

    pub fn graph(&self) -> Graph {
        complete_multipartite(&self.part_sizes())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn multipartite_examples() {
        let k3 = complete_multipartite(&[1, 1, 1]);
        assert_eq!((k3.vertex_count(), k3.edge_count()), (3, 3));
        let k312 = complete_multipartite(&[1, 1, 1, 2]);
        assert_eq!((k312.vertex_count(), k312.edge_count()), (5, 9));
        let oct = complete_multipartite(&[2, 2, 2]);
        assert_eq!((oct.vertex_count(), oct.edge_count()), (6, 12));
        assert!(oct.degrees().iter().all(|&d| d == 4));
        assert_eq!(k312.label(4), "(3,1)");
    }

    #[test]
    fn lexicographic_examples() {
        let k2 = complete(2);
        let k2bar = edgeless(2);
        let p = lexicographic_product(&k2, &k2bar);
        assert_eq!(detect_complete_multipartite(&p), Ok(vec![2, 2]));
        assert_eq!(p.edge_count(), 4);
        let disjoint = lexicographic_product(&k2bar, &k2);
        assert_eq!(disjoint.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
        let base = path(4);
        let same = lexicographic_product(&base, &complete(1));
        assert_eq!(same.edges().collect::<Vec<_>>(), base.edges().collect::<Vec<_>>());
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement(&complete(5)).edge_count(), 0);
        let c = complement(&complete_multipartite(&[2, 2, 2]));
        assert_eq!(c.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3), (4, 5)]);
    }

    #[test]
    fn johnson_examples() {
        let j62 = johnson(6, 2).unwrap();
        assert_eq!((j62.vertex_count(), j62.edge_count()), (15, 60));
        assert!(j62.degrees().iter().all(|&d| d == 8));
        assert_eq!(&j62.labels()[..4], &["{1,2}", "{1,3}", "{2,3}", "{1,4}"]);
        assert!(johnson(5, 1).unwrap().is_complete());
        let j32 = johnson(3, 2).unwrap();
        assert!(j32.is_complete() && j32.vertex_count() == 3);
        assert!(johnson(3, 4).is_err());
    }

    #[test]
    fn detection_examples() {
        assert_eq!(detect_complete_multipartite(&complete_multipartite(&[2, 2, 2])), Ok(vec![2, 2, 2]));
        let c5 = Graph::unlabeled(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(detect_complete_multipartite(&c5), Err(GraphError::NotMultipartite));
        assert_eq!(detect_complete_multipartite(&complete(1)), Ok(vec![1]));
        assert_eq!(detect_complete_multipartite(&path(3)), Ok(vec![1, 2]));
        assert_eq!(detect_complete_multipartite(&path(4)), Err(GraphError::NotMultipartite));
    }

    #[test]
    fn partition_spec_constraints() {
        assert!(PartitionSpec::new(1, 2, 1).is_err());
        assert!(PartitionSpec::new(1, 2, 2).is_err());
        assert!(PartitionSpec::new(2, 2, 1).is_ok());
        let spec = PartitionSpec::new(2, 3, 2).unwrap();
        assert_eq!(spec.part_sizes(), vec![2, 2, 2, 4]);
        assert_eq!(PartitionSpec::from_part_sizes(&[2, 2, 2, 4]), Some(spec));
        assert_eq!(PartitionSpec::from_part_sizes(&[1, 1, 1, 2]), PartitionSpec::new(1, 3, 2).ok());
        assert_eq!(PartitionSpec::from_part_sizes(&[4, 4, 4]), PartitionSpec::new(4, 2, 1).ok());
        assert_eq!(PartitionSpec::from_part_sizes(&[1, 2, 3]), None);
    }

    proptest! {
        #[test]
        fn detect_recovers_parts(parts in prop::collection::vec(1usize..6, 1..8)) {
            prop_assume!(parts.iter().sum::<usize>() <= 40);
            let mut sorted = parts.clone();
            sorted.sort_unstable();
            prop_assert_eq!(detect_complete_multipartite(&complete_multipartite(&parts)), Ok(sorted));
        }

        #[test]
        fn equal_parts_are_regular(s in 1usize..6, k in 1usize..7) {
            let g = complete_multipartite(&vec![s; k]);
            prop_assert!(g.degrees().iter().all(|&d| d == s * k - s));
        }

        #[test]
        fn lexicographic_with_empty_fiber_edge_count(n in 1usize..5, edges in prop::collection::vec((0usize..7, 0usize..7), 0..15)) {
            let edges: Vec<_> = edges.into_iter().filter(|(u, v)| u != v).collect();
            let g = Graph::unlabeled(7, edges).unwrap();
            let p = lexicographic_product(&g, &edgeless(n));
            prop_assert_eq!(p.edge_count(), n * n * g.edge_count());
        }

        #[test]
        fn complement_is_involution(edges in prop::collection::vec((0usize..9, 0usize..9), 0..30)) {
            let edges: Vec<_> = edges.into_iter().filter(|(u, v)| u != v).collect();
            let g = Graph::unlabeled(9, edges).unwrap();
            prop_assert_eq!(complement(&complement(&g)), g);
        }
    }
}
