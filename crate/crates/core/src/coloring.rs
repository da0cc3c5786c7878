//! Edge colourings: the explicit two-colourings of complete multipartite
//! graphs `K_{m[l],ln}` and of `J(6,2) ∘ K̄_2`, plus seeded random ones.

use crate::graph::{edgeless, johnson, lexicographic_product, Graph, PartitionSpec};
use rand::RngCore;
use rand_xoshiro::rand_core::SeedableRng;
use rand_xoshiro::SplitMix64;
use thiserror::Error;

pub type Color = u16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("({u}, {v}) is not an edge")]
    NotAnEdge { u: usize, v: usize },
    #[error("edge ({u}, {v}) coloured twice")]
    DuplicateEdge { u: usize, v: usize },
    #[error("edge ({u}, {v}) has no colour")]
    MissingEdge { u: usize, v: usize },
    #[error("colour {color} on ({u}, {v}) is outside 1..={count}")]
    ColorOutOfRange { u: usize, v: usize, color: Color, count: Color },
    #[error("colour count must be positive")]
    NoColors,
}

/// A total assignment of colours `1..=color_count` to the edges of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    n: usize,
    color_count: Color,
    // n x n symmetric matrix, 0 where there is no edge
    colors: Vec<Color>,
}

impl EdgeColoring {
    pub fn from_fn(
        g: &Graph,
        color_count: Color,
        mut color: impl FnMut(usize, usize) -> Color,
    ) -> Result<Self, ColoringError> {
        Self::from_assignments(g, color_count, g.edges().map(|(u, v)| (u, v, color(u, v))).collect::<Vec<_>>())
    }

    /// From explicit `(u, v, colour)` triples that must cover every edge once.
    pub fn from_assignments(
        g: &Graph,
        color_count: Color,
        assignments: impl IntoIterator<Item = (usize, usize, Color)>,
    ) -> Result<Self, ColoringError> {
        if color_count == 0 {
            return Err(ColoringError::NoColors);
        }
        let n = g.vertex_count();
        let mut colors = vec![0; n * n];
        for (u, v, c) in assignments {
            if u >= n || v >= n || !g.is_adjacent(u, v) {
                return Err(ColoringError::NotAnEdge { u, v });
            }
            if c == 0 || c > color_count {
                return Err(ColoringError::ColorOutOfRange { u, v, color: c, count: color_count });
            }
            if colors[u * n + v] != 0 {
                return Err(ColoringError::DuplicateEdge { u: u.min(v), v: u.max(v) });
            }
            colors[u * n + v] = c;
            colors[v * n + u] = c;
        }
        if let Some((u, v)) = g.edges().find(|&(u, v)| colors[u * n + v] == 0) {
            return Err(ColoringError::MissingEdge { u, v });
        }
        Ok(EdgeColoring { n, color_count, colors })
    }

    pub fn monochromatic(g: &Graph) -> Self {
        Self::from_fn(g, 1, |_, _| 1).expect("one colour on every edge")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn color_count(&self) -> Color {
        self.color_count
    }

    #[inline]
    pub fn color(&self, u: usize, v: usize) -> Option<Color> {
        match self.colors[u * self.n + v] {
            0 => None,
            c => Some(c),
        }
    }

    /// Number of distinct colours that actually occur.
    pub fn colors_used(&self) -> usize {
        let mut seen = vec![false; self.color_count as usize + 1];
        self.colors.iter().for_each(|&c| seen[c as usize] = true);
        seen[1..].iter().filter(|&&s| s).count()
    }

    /// `(u, v, colour)` with `u < v`, in lexicographic order.
    pub fn assignments(&self) -> impl Iterator<Item = (usize, usize, Color)> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).filter_map(move |v| self.color(u, v).map(|c| (u, v, c))))
    }

    pub fn color_class(&self, color: Color) -> Vec<(usize, usize)> {
        self.assignments().filter(|&(_, _, c)| c == color).map(|(u, v, _)| (u, v)).collect()
    }

    /// True if the coloured pairs are exactly the edges of `g`.
    pub fn covers_exactly(&self, g: &Graph) -> bool {
        g.vertex_count() == self.n
            && (0..self.n).all(|u| (0..self.n).all(|v| g.is_adjacent(u, v) == self.color(u, v).is_some()))
    }

    /// Moves the colouring along a graph isomorphism: vertex `v` here becomes
    /// `mapping[v]` in `target`.
    pub fn transport(&self, target: &Graph, mapping: &[usize]) -> Result<Self, ColoringError> {
        EdgeColoring::from_assignments(
            target,
            self.color_count,
            self.assignments().map(|(u, v, c)| (mapping[u], mapping[v], c)).collect::<Vec<_>>(),
        )
    }
}

/// Vertex `a_{j,i}` of `K_{m[l],ln}`: part `i` in `1..=m+1` (part `m+1` is the
/// big one), position `j` within the part, both 1-based.
fn vertex_index(spec: &PartitionSpec, j: usize, i: usize) -> usize {
    let (l, m) = (spec.l(), spec.m());
    let size = if i == m + 1 { l * spec.n() } else { l };
    assert!((1..=m + 1).contains(&i) && (1..=size).contains(&j), "a_{{{j},{i}}} does not exist");
    (i - 1) * l + (j - 1)
}

/// The colour-1 edges of the two-colouring of `K_{m[l],ln}`, as `(j, i)` pairs
/// of `a_{j,i}` indices.
pub fn prop24_color_one_edges(spec: &PartitionSpec) -> Vec<((usize, usize), (usize, usize))> {
    let (l, m, n) = (spec.l(), spec.m(), spec.n());
    let mut edges = Vec::new();
    if n == 1 {
        match m {
            2 => {
                let r = l / 2;
                for j in 1..=r {
                    let (o, e) = (2 * j - 1, 2 * j);
                    edges.extend([
                        ((o, 1), (o, 2)),
                        ((o, 1), (e, 2)),
                        ((o, 1), (o, 3)),
                        ((e, 1), (o, 2)),
                        ((e, 1), (e, 2)),
                        ((e, 1), (e, 3)),
                        ((o, 2), (o, 3)),
                        ((o, 2), (e, 3)),
                    ]);
                }
                if l % 2 == 1 {
                    edges.push(((l, 2), (l, 3)));
                    for j in 1..=r {
                        let (o, e) = (2 * j - 1, 2 * j);
                        edges.extend([
                            ((l, 1), (o, 2)),
                            ((l, 1), (e, 3)),
                            ((l, 2), (o, 1)),
                            ((l, 2), (e, 1)),
                            ((l, 2), (o, 3)),
                            ((l, 2), (e, 3)),
                            ((l, 3), (e, 2)),
                        ]);
                    }
                }
            }
            3 => {
                for j in 1..=l {
                    edges.extend([((j, 1), (j, 2)), ((j, 2), (j, 4)), ((j, 3), (j, 4))]);
                }
            }
            _ => {
                for j in 1..=l {
                    edges.extend((1..=m).map(|i| ((j, i), (j, i + 1))));
                    edges.push(((j, m + 1), (j, 1)));
                }
            }
        }
    } else {
        for j in 1..=l {
            edges.extend((1..m).map(|i| ((j, i), (j, i + 1))));
            edges.push(((j, 1), (j, m)));
            edges.extend((1..=n).map(|k| ((j, k), ((j - 1) * n + k, m + 1))));
        }
    }
    edges
}

/// `K_{m[l],ln}` with colour 1 on the listed edge families and colour 2 on all
/// other edges.
pub fn prop24_coloring(spec: &PartitionSpec) -> (Graph, EdgeColoring) {
    let graph = spec.graph();
    let nv = graph.vertex_count();
    let mut first = vec![false; nv * nv];
    for ((j1, i1), (j2, i2)) in prop24_color_one_edges(spec) {
        let (u, v) = (vertex_index(spec, j1, i1), vertex_index(spec, j2, i2));
        assert!(graph.is_adjacent(u, v), "listed pair a_{{{j1},{i1}}} a_{{{j2},{i2}}} is not an edge");
        first[u * nv + v] = true;
        first[v * nv + u] = true;
    }
    let coloring = EdgeColoring::from_fn(&graph, 2, |u, v| if first[u * nv + v] { 1 } else { 2 })
        .expect("every edge receives colour 1 or 2");
    (graph, coloring)
}

/// `J(6,2) ∘ K̄_2` with vertices `a_i a_j` and `b_i b_j` (labels `a1a2`,
/// `b1b2`, ...). An edge between `x_i x_j` and `y_i y_k` (sharing `i`) gets
/// colour 1 when both ends are `a` or both `b` and `i > max(j, k)`, or when
/// the ends are of different letters and `i < min(j, k)`; colour 2 otherwise.
pub fn j62_graph_and_coloring() -> (Graph, EdgeColoring) {
    let base = johnson(6, 2).expect("valid Johnson parameters");
    let pairs: Vec<(usize, usize)> = base
        .labels()
        .iter()
        .map(|l| {
            let inner: Vec<usize> = l.trim_matches(|c| c == '{' || c == '}').split(',').map(|x| x.parse().unwrap()).collect();
            (inner[0], inner[1])
        })
        .collect();
    let letter = |v: usize| if v.is_multiple_of(2) { 'a' } else { 'b' };
    let labels = (0..30)
        .map(|v| {
            let (i, j) = pairs[v / 2];
            let c = letter(v);
            format!("{c}{i}{c}{j}")
        })
        .collect();
    let graph = lexicographic_product(&base, &edgeless(2)).relabeled(labels).expect("distinct labels");
    let coloring = EdgeColoring::from_fn(&graph, 2, |u, v| {
        let (p, q) = (pairs[u / 2], pairs[v / 2]);
        let common = [p.0, p.1].into_iter().find(|x| *x == q.0 || *x == q.1).expect("adjacent sets meet");
        let other = |s: (usize, usize)| if s.0 == common { s.1 } else { s.0 };
        let (j, k) = (other(p), other(q));
        let rule = if letter(u) == letter(v) { common > j.max(k) } else { common < j.min(k) };
        if rule {
            1
        } else {
            2
        }
    })
    .expect("two colours");
    (graph, coloring)
}

/// Independent fair two-colouring of the edges from a SplitMix64 stream
/// seeded with `seed`: edges are visited in lexicographic `(u, v)` order and
/// each takes colour `1 + (next_u64() >> 63)`.
pub fn random_two_coloring(g: &Graph, seed: u64) -> EdgeColoring {
    let mut rng = SplitMix64::seed_from_u64(seed);
    EdgeColoring::from_fn(g, 2, |_, _| 1 + (rng.next_u64() >> 63) as Color).expect("two colours")
}
