//! Simple undirected graphs with labelled vertices and bitset adjacency.

mod connectivity;
mod constructions;
mod isomorphism;

pub use connectivity::{local_connectivity, vertex_connectivity, vertex_connectivity_capped};
pub use constructions::{
    complement, complete, complete_multipartite, detect_complete_multipartite, edgeless,
    johnson, lexicographic_product, path, PartitionSpec,
};
pub use isomorphism::{
    are_isomorphic, are_isomorphic_with_budget, is_isomorphism, Isomorphism, DEFAULT_NODE_BUDGET,
};

use fixedbitset::FixedBitSet;
use std::collections::{HashSet, VecDeque};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),
    #[error("invalid vertex label {0:?}")]
    InvalidLabel(String),
    #[error("invalid partition spec: {0}")]
    InvalidSpec(String),
    #[error("graph is not complete multipartite")]
    NotMultipartite,
    #[error("isomorphism search exceeded its budget of {budget} nodes")]
    SearchBudgetExceeded { budget: u64 },
}

/// An immutable simple graph. Vertices are `0..n`; each carries a distinct
/// label without whitespace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<FixedBitSet>,
}

impl Graph {
    pub fn from_edges(
        labels: Vec<String>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        check_labels(&labels)?;
        let n = labels.len();
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { labels, adj })
    }

    /// Vertices labelled `0..n`.
    pub fn unlabeled(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        Self::from_edges(default_labels(n), edges)
    }

    /// Builds the graph whose edges are the pairs `u < v` with `adjacent(u, v)`.
    pub fn from_fn(
        labels: Vec<String>,
        mut adjacent: impl FnMut(usize, usize) -> bool,
    ) -> Result<Self, GraphError> {
        let n = labels.len();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Self::from_edges(labels, edges)
    }

    /// Same graph with new labels.
    pub fn relabeled(&self, labels: Vec<String>) -> Result<Self, GraphError> {
        assert_eq!(labels.len(), self.vertex_count(), "label count must match vertex count");
        check_labels(&labels)?;
        Ok(Graph { labels, adj: self.adj.clone() })
    }

    /// The image of this graph under `perm`: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.vertex_count();
        let mut labels = vec![String::new(); n];
        for v in 0..n {
            labels[perm[v]] = self.labels[v].clone();
        }
        Graph::from_edges(labels, self.edges().map(|(u, v)| (perm[u], perm[v])))
            .expect("permutation of a valid graph")
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones(..)).sum::<usize>() / 2
    }

    #[inline]
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn neighbor_iter(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.vertex_count()).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.vertex_count()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        self.adj[u].intersection_count(&self.adj[v])
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertex_count()).flat_map(move |u| self.adj[u].ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        n == 0 || self.edge_count() == n * (n - 1) / 2
    }

    pub fn is_regular(&self) -> bool {
        let degrees = self.degrees();
        degrees.windows(2).all(|w| w[0] == w[1])
    }

    fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for w in self.adj[u].ones() {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() == 0 || self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// Largest shortest-path distance, or `None` if disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut diameter = 0;
        for v in 0..self.vertex_count() {
            for d in self.bfs_distances(v) {
                diameter = diameter.max(d?);
            }
        }
        Some(diameter)
    }
}

pub(crate) fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|v| v.to_string()).collect()
}

fn check_labels(labels: &[String]) -> Result<(), GraphError> {
    let mut seen = HashSet::with_capacity(labels.len());
    for label in labels {
        if label.is_empty() || label.chars().any(char::is_whitespace) {
            return Err(GraphError::InvalidLabel(label.clone()));
        }
        if !seen.insert(label.as_str()) {
            return Err(GraphError::DuplicateLabel(label.clone()));
        }
    }
    Ok(())
}
