//! The non-commuting graph of a finite group and checks of its structure.
//!
//! Vertices are the non-central elements in increasing index order; two of
//! them are adjacent iff they do not commute. Labels are element names.

use crate::graph::{edgeless, lexicographic_product, Graph};
use crate::group::{cyclic, direct_product, ElementSet, Group, GroupError};
use num_rational::Ratio;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NcGraphError {
    #[error("group is abelian; its non-commuting graph is empty")]
    AbelianGroup,
    #[error("common-neighbour bound violated at ({x}, {y}): tau = {tau}, |G| = {order}")]
    BoundViolated { x: usize, y: usize, tau: usize, order: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Clone)]
pub struct NonCommutingGraph<'g> {
    group: &'g Group,
    graph: Graph,
    vertex_to_element: Vec<usize>,
    element_to_vertex: Vec<Option<usize>>,
    centralizers: Vec<ElementSet>,
    center: ElementSet,
}

pub fn noncommuting_graph(group: &Group) -> Result<NonCommutingGraph<'_>, NcGraphError> {
    let center = group.center();
    if center.len() == group.order() {
        return Err(NcGraphError::AbelianGroup);
    }
    let vertex_to_element: Vec<usize> = (0..group.order()).filter(|&g| !center.contains(g)).collect();
    let mut element_to_vertex = vec![None; group.order()];
    for (v, &g) in vertex_to_element.iter().enumerate() {
        element_to_vertex[g] = Some(v);
    }
    let labels = vertex_to_element.iter().map(|&g| group.name(g).to_string()).collect();
    let graph = Graph::from_fn(labels, |u, v| !group.commute(vertex_to_element[u], vertex_to_element[v]))
        .expect("element names are valid distinct labels");
    let centralizers = vertex_to_element.iter().map(|&g| group.centralizer(g)).collect();
    Ok(NonCommutingGraph { group, graph, vertex_to_element, element_to_vertex, centralizers, center })
}

impl<'g> NonCommutingGraph<'g> {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn group(&self) -> &'g Group {
        self.group
    }

    pub fn center(&self) -> &ElementSet {
        &self.center
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn element(&self, vertex: usize) -> usize {
        self.vertex_to_element[vertex]
    }

    pub fn vertex_of(&self, element: usize) -> Option<usize> {
        self.element_to_vertex[element]
    }

    /// Centralizer of the element at `vertex`.
    pub fn centralizer(&self, vertex: usize) -> &ElementSet {
        &self.centralizers[vertex]
    }

    /// Number of common neighbours of two distinct vertices (graph side).
    ///
    /// Debug builds also compute `|G| - |C(x) ∪ C(y)|` on the group side and
    /// assert that both agree.
    pub fn tau(&self, x: usize, y: usize) -> usize {
        assert_ne!(x, y, "tau needs distinct vertices");
        let t = self.graph.common_neighbor_count(x, y);
        debug_assert_eq!(t, self.tau_from_centralizers(x, y));
        t
    }

    /// `|G| - |C_G(x) ∪ C_G(y)|`.
    pub fn tau_from_centralizers(&self, x: usize, y: usize) -> usize {
        self.group.order() - self.centralizers[x].union_len(&self.centralizers[y])
    }

    /// Unordered vertex pairs `x < y`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.vertex_count();
        (0..n).flat_map(move |x| (x + 1..n).map(move |y| (x, y)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommonNeighborReport {
    pub order: usize,
    pub pairs_checked: usize,
    pub min_tau: usize,
    pub witness: (usize, usize),
    /// `min_tau / |G|`, to compare with 1/6.
    pub min_ratio: Ratio<u64>,
}

/// Checks `6 τ(x, y) >= |G|` for every pair of distinct vertices, and that the
/// graph-side and centralizer-side values of `τ` agree.
pub fn lemma21_check(group: &Group) -> Result<CommonNeighborReport, NcGraphError> {
    let ncg = noncommuting_graph(group)?;
    let order = group.order();
    let mut best: Option<(usize, (usize, usize))> = None;
    let mut pairs_checked = 0;
    for (x, y) in ncg.pairs() {
        let graph_side = ncg.graph.common_neighbor_count(x, y);
        let group_side = ncg.tau_from_centralizers(x, y);
        assert_eq!(graph_side, group_side, "tau mismatch at ({x}, {y})");
        if 6 * graph_side < order {
            return Err(NcGraphError::BoundViolated { x, y, tau: graph_side, order });
        }
        if best.is_none_or(|(t, _)| graph_side < t) {
            best = Some((graph_side, (x, y)));
        }
        pairs_checked += 1;
    }
    // a non-abelian group has at least 3 non-central elements
    let (min_tau, witness) = best.expect("at least one pair");
    Ok(CommonNeighborReport {
        order,
        pairs_checked,
        min_tau,
        witness,
        min_ratio: Ratio::new(min_tau as u64, order as u64),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCountReport {
    pub edges: usize,
    /// `Σ_x (|G| - |C(x)|)` over vertices; equals `2 |E|`.
    pub centralizer_sum: usize,
    /// `|G| (|G| - |Z(G)|) / 4`.
    pub lower_bound: Ratio<u64>,
    pub tight: bool,
}

/// `|E| = ½ Σ_x (|G| - |C(x)|) >= ¼ |G| (|G| - |Z(G)|)`.
pub fn edge_count_bound_check(group: &Group) -> Result<EdgeCountReport, NcGraphError> {
    let ncg = noncommuting_graph(group)?;
    let order = group.order();
    let edges = ncg.graph.edge_count();
    let centralizer_sum: usize =
        (0..ncg.vertex_count()).map(|v| order - ncg.centralizer(v).len()).sum();
    assert_eq!(2 * edges, centralizer_sum, "edge count identity failed");
    let lower_bound = Ratio::new((order * (order - ncg.center.len())) as u64, 4);
    assert!(Ratio::from_integer(edges as u64) >= lower_bound, "edge count bound failed");
    Ok(EdgeCountReport {
        edges,
        centralizer_sum,
        tight: Ratio::from_integer(edges as u64) == lower_bound,
        lower_bound,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductReport {
    pub fiber_size: usize,
    pub vertices: usize,
    pub edges: usize,
}

/// Builds `Γ(G × Z_n)` and `Γ(G) ∘ K̄_n` and checks that the natural map
/// `(g, a) ↦ (vertex of g, a)` is an isomorphism.
pub fn lemma22_check(group: &Group, n: usize) -> Result<ProductReport, NcGraphError> {
    let base = noncommuting_graph(group)?;
    let abelian = cyclic(n)?;
    let product_group = direct_product(group, &abelian)?;
    let product = noncommuting_graph(&product_group)?;
    let lex = lexicographic_product(base.graph(), &edgeless(n));

    assert_eq!(product.vertex_count(), lex.vertex_count(), "vertex counts differ");
    // element (g, a) of G × Z_n has index g * n + a
    let map: Vec<usize> = (0..product.vertex_count())
        .map(|v| {
            let e = product.element(v);
            let (g, a) = (e / n, e % n);
            let bv = base.vertex_of(g).expect("non-central in G × A means non-central in G");
            bv * n + a
        })
        .collect();
    let mut hit = vec![false; lex.vertex_count()];
    for &m in &map {
        assert!(!std::mem::replace(&mut hit[m], true), "natural map is not injective");
    }
    for (u, v) in product.pairs() {
        assert_eq!(
            product.graph().is_adjacent(u, v),
            lex.is_adjacent(map[u], map[v]),
            "adjacency differs at ({u}, {v})"
        );
    }
    Ok(ProductReport { fiber_size: n, vertices: lex.vertex_count(), edges: lex.edge_count() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_multipartite, detect_complete_multipartite, vertex_connectivity};
    use crate::group::{dicyclic, dihedral};

    #[test]
    fn abelian_rejected() {
        let z6 = cyclic(6).unwrap();
        assert_eq!(noncommuting_graph(&z6).unwrap_err(), NcGraphError::AbelianGroup);
        assert_eq!(lemma21_check(&z6).unwrap_err(), NcGraphError::AbelianGroup);
    }

    #[test]
    fn small_dihedral_and_quaternion_graphs() {
        let d6 = dihedral(3).unwrap();
        let g = noncommuting_graph(&d6).unwrap();
        assert_eq!((g.vertex_count(), g.graph().edge_count()), (5, 9));
        assert_eq!(detect_complete_multipartite(g.graph()), Ok(vec![1, 1, 1, 2]));
        assert_eq!(g.graph().labels(), &["r", "r^2", "s", "r*s", "r^2*s"]);

        let d8 = dihedral(4).unwrap();
        assert_eq!(detect_complete_multipartite(noncommuting_graph(&d8).unwrap().graph()), Ok(vec![2, 2, 2]));
        let q8 = dicyclic(2).unwrap();
        assert_eq!(detect_complete_multipartite(noncommuting_graph(&q8).unwrap().graph()), Ok(vec![2, 2, 2]));
    }

    #[test]
    fn tau_examples() {
        let d6 = dihedral(3).unwrap();
        let g = noncommuting_graph(&d6).unwrap();
        let v = |name: &str| g.vertex_of(d6.element_by_name(name).unwrap()).unwrap();
        assert_eq!(g.tau(v("r"), v("s")), 2);
        assert_eq!(g.tau(v("r"), v("r^2")), 3);
        let d8 = dihedral(4).unwrap();
        let g8 = noncommuting_graph(&d8).unwrap();
        let (x, y) = g8.graph().edges().next().unwrap();
        assert_eq!(g8.tau(x, y), 2);
    }

    #[test]
    fn common_neighbor_report_values() {
        let r = lemma21_check(&dihedral(3).unwrap()).unwrap();
        assert_eq!(r.min_tau, 2);
        assert_eq!(r.pairs_checked, 10);
        let q = lemma21_check(&dicyclic(2).unwrap()).unwrap();
        assert!(6 * q.min_tau >= 8);
    }

    #[test]
    fn edge_count_examples() {
        let d8 = edge_count_bound_check(&dihedral(4).unwrap()).unwrap();
        assert_eq!(d8.edges, 12);
        assert_eq!(d8.lower_bound, Ratio::from_integer(12));
        assert!(d8.tight);
        let d6 = edge_count_bound_check(&dihedral(3).unwrap()).unwrap();
        assert_eq!(d6.edges, 9);
        assert_eq!(d6.lower_bound, Ratio::new(15, 2));
        assert!(!d6.tight);
        let q8 = edge_count_bound_check(&dicyclic(2).unwrap()).unwrap();
        assert!(q8.tight && q8.edges == 12);
    }

    #[test]
    fn lemma22_examples() {
        let d6 = dihedral(3).unwrap();
        let r = lemma22_check(&d6, 3).unwrap();
        assert_eq!(r.vertices, 15);
        let one = lemma22_check(&d6, 1).unwrap();
        assert_eq!((one.vertices, one.edges), (5, 9));
        lemma22_check(&dicyclic(2).unwrap(), 3).unwrap();
        lemma22_check(&dihedral(4).unwrap(), 3).unwrap();
    }

    #[test]
    fn multipartite_structure_of_families() {
        for n in 3..=10usize {
            let g = dihedral(n).unwrap();
            let parts = detect_complete_multipartite(noncommuting_graph(&g).unwrap().graph()).unwrap();
            let mut expected = if n % 2 == 1 { vec![1; n] } else { vec![2; n / 2] };
            expected.push(n - if n % 2 == 1 { 1 } else { 2 });
            expected.sort_unstable();
            assert_eq!(parts, expected, "D_{}", 2 * n);
        }
        for m in 2..=6usize {
            let g = dicyclic(m).unwrap();
            let parts = detect_complete_multipartite(noncommuting_graph(&g).unwrap().graph()).unwrap();
            let mut expected = vec![2; m];
            expected.push(2 * m - 2);
            expected.sort_unstable();
            assert_eq!(parts, expected, "Q_{}", 4 * m);
        }
    }

    #[test]
    fn connected_with_diameter_two() {
        for g in [dihedral(3).unwrap(), dihedral(8).unwrap(), dicyclic(5).unwrap()] {
            let ncg = noncommuting_graph(&g).unwrap();
            assert_eq!(ncg.graph().diameter(), Some(2));
            assert!(ncg.graph().min_degree() > 0);
        }
        let d14 = noncommuting_graph(&dihedral(7).unwrap()).unwrap().into_graph();
        assert_eq!(vertex_connectivity(&d14), 7);
        assert_eq!(d14.edge_count(), complete_multipartite(&[1, 1, 1, 1, 1, 1, 1, 6]).edge_count());
    }
}
