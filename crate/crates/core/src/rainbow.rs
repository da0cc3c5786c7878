//! Rainbow-k-connectivity: deciding it for a given edge colouring, producing
//! checkable certificates, and searching for good random two-colourings.
//!
//! A rainbow path has pairwise distinct edge colours, so its length is at most
//! the number of colours in use. With at most two colours every rainbow path
//! has length 1 or 2, and paths `x - w - y` through distinct common neighbours
//! are automatically internally disjoint; the pair `(x, y)` is then served by
//! the direct edge (if any) plus one path per common neighbour `w` with
//! `colour(x, w) != colour(w, y)`. More colours fall back to enumerating
//! rainbow paths and backtracking over disjoint selections.

use crate::coloring::{random_two_coloring, EdgeColoring};
use crate::graph::{vertex_connectivity_capped, Graph};
use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureWitness {
    pub pair: (usize, usize),
    /// Internally disjoint rainbow paths available for the pair.
    pub found: usize,
    pub needed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairPaths {
    pub pair: (usize, usize),
    pub paths: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RainbowCertificate {
    pub k: usize,
    pub colors_used: usize,
    pub pairs: Vec<PairPaths>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RainbowError {
    #[error("k must be at least 1")]
    InvalidK,
    #[error("k = {k} exceeds the vertex connectivity {kappa}")]
    PreconditionKappa { k: usize, kappa: usize },
    #[error("colouring uses {used} colours, at most 2 allowed")]
    TooManyColors { used: usize },
    #[error("colouring rejected: pair {:?} has {} of {} required rainbow paths", .0.pair, .0.found, .0.needed)]
    ColoringRejected(FailureWitness),
    #[error("colouring does not match the graph")]
    GraphMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("certificate is for k = {found}, expected {expected}")]
    WrongK { expected: usize, found: usize },
    #[error("pair {0:?} is missing or repeated")]
    PairCoverage((usize, usize)),
    #[error("pair {0:?} lists fewer than k paths")]
    TooFewPaths((usize, usize)),
    #[error("path {1:?} for pair {0:?} is not a valid simple path between its endpoints")]
    BadPath((usize, usize), Vec<usize>),
    #[error("path {1:?} for pair {0:?} repeats a colour")]
    NotRainbow((usize, usize), Vec<usize>),
    #[error("paths for pair {0:?} share an internal vertex")]
    NotDisjoint((usize, usize)),
}

/// All simple `x`-`y` paths with at most `max_len` edges and pairwise distinct
/// edge colours, in lexicographic order of their vertex sequences.
pub fn enumerate_rainbow_paths(
    g: &Graph,
    col: &EdgeColoring,
    x: usize,
    y: usize,
    max_len: usize,
) -> Vec<Vec<usize>> {
    assert_ne!(x, y, "endpoints must differ");
    let mut out = Vec::new();
    let mut path = vec![x];
    let mut on_path = vec![false; g.vertex_count()];
    on_path[x] = true;
    let mut used = vec![false; col.color_count() as usize + 1];
    extend_rainbow(g, col, y, max_len, &mut path, &mut on_path, &mut used, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn extend_rainbow(
    g: &Graph,
    col: &EdgeColoring,
    target: usize,
    max_len: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    used: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) {
    let last = *path.last().unwrap();
    if path.len() > max_len {
        return;
    }
    for w in g.neighbor_iter(last) {
        let c = col.color(last, w).expect("coloured edge") as usize;
        if on_path[w] || used[c] {
            continue;
        }
        path.push(w);
        if w == target {
            out.push(path.clone());
        } else {
            on_path[w] = true;
            used[c] = true;
            extend_rainbow(g, col, target, max_len, path, on_path, used, out);
            used[c] = false;
            on_path[w] = false;
        }
        path.pop();
    }
}

/// Internally disjoint rainbow paths of length at most 2: the direct edge
/// first (if present), then `x - w - y` for each suitable common neighbour
/// in increasing order. This is the complete answer when at most two colours
/// are in use.
pub fn short_rainbow_paths(g: &Graph, col: &EdgeColoring, x: usize, y: usize) -> Vec<Vec<usize>> {
    let mut paths = Vec::new();
    if g.is_adjacent(x, y) {
        paths.push(vec![x, y]);
    }
    for w in g.neighbors(x).intersection(g.neighbors(y)) {
        if col.color(x, w) != col.color(w, y) {
            paths.push(vec![x, w, y]);
        }
    }
    paths
}

/// Counts what [`short_rainbow_paths`] would return, without allocating.
pub fn count_short_rainbow_paths(g: &Graph, col: &EdgeColoring, x: usize, y: usize) -> usize {
    let direct = usize::from(g.is_adjacent(x, y));
    direct
        + g.neighbors(x)
            .intersection(g.neighbors(y))
            .filter(|&w| col.color(x, w) != col.color(w, y))
            .count()
}

fn internal_mask(n: usize, path: &[usize]) -> FixedBitSet {
    let mut m = FixedBitSet::with_capacity(n);
    for &v in &path[1..path.len() - 1] {
        m.insert(v);
    }
    m
}

/// Picks `need` pairwise internally disjoint paths from `paths` (in order of
/// preference), or returns `None`.
fn select_disjoint(n: usize, paths: &[Vec<usize>], need: usize) -> Option<Vec<usize>> {
    let masks: Vec<FixedBitSet> = paths.iter().map(|p| internal_mask(n, p)).collect();
    fn go(masks: &[FixedBitSet], from: usize, need: usize, used: &mut FixedBitSet, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == need {
            return true;
        }
        for i in from..masks.len() {
            if masks.len() - i < need - chosen.len() {
                return false;
            }
            if masks[i].is_disjoint(used) {
                used.union_with(&masks[i]);
                chosen.push(i);
                if go(masks, i + 1, need, used, chosen) {
                    return true;
                }
                chosen.pop();
                used.difference_with(&masks[i]);
            }
        }
        false
    }
    let mut chosen = Vec::new();
    go(&masks, 0, need, &mut FixedBitSet::with_capacity(n), &mut chosen).then_some(chosen)
}

/// Largest number of pairwise internally disjoint rainbow `x`-`y` paths, by
/// exhaustive backtracking over every rainbow path (length capped by the
/// number of colours in use). Exponential; meant for small graphs.
pub fn max_disjoint_rainbow_paths(g: &Graph, col: &EdgeColoring, x: usize, y: usize) -> usize {
    let n = g.vertex_count();
    let cap = col.colors_used().min(n.saturating_sub(1));
    let paths = enumerate_rainbow_paths(g, col, x, y, cap);
    let masks: Vec<FixedBitSet> = paths.iter().map(|p| internal_mask(n, p)).collect();
    fn best(masks: &[FixedBitSet], from: usize, used: &mut FixedBitSet, size: usize, record: &mut usize) {
        *record = (*record).max(size);
        for i in from..masks.len() {
            if size + (masks.len() - i) <= *record {
                return;
            }
            if masks[i].is_disjoint(used) {
                used.union_with(&masks[i]);
                best(masks, i + 1, used, size + 1, record);
                used.difference_with(&masks[i]);
            }
        }
    }
    let mut record = 0;
    best(&masks, 0, &mut FixedBitSet::with_capacity(n), 0, &mut record);
    record
}

fn paths_for_pair(g: &Graph, col: &EdgeColoring, x: usize, y: usize, k: usize) -> Result<Vec<Vec<usize>>, usize> {
    let used = col.colors_used();
    if used <= 2 {
        let mut paths = short_rainbow_paths(g, col, x, y);
        if paths.len() >= k {
            paths.truncate(k);
            return Ok(paths);
        }
        return Err(paths.len());
    }
    let cap = used.min(g.vertex_count() - 1);
    let mut paths = enumerate_rainbow_paths(g, col, x, y, cap);
    paths.sort_by_key(Vec::len);
    match select_disjoint(g.vertex_count(), &paths, k) {
        Some(chosen) => Ok(chosen.into_iter().map(|i| paths[i].clone()).collect()),
        None => Err(max_disjoint_rainbow_paths(g, col, x, y)),
    }
}

/// The first pair (in index order) lacking `k` internally disjoint rainbow
/// paths, or `None` if the colouring is rainbow-k-connected.
pub fn first_failure(g: &Graph, col: &EdgeColoring, k: usize) -> Option<FailureWitness> {
    let n = g.vertex_count();
    let two_colors = col.colors_used() <= 2;
    for x in 0..n {
        for y in x + 1..n {
            let found = if two_colors {
                let c = count_short_rainbow_paths(g, col, x, y);
                if c >= k {
                    continue;
                }
                c
            } else {
                match paths_for_pair(g, col, x, y, k) {
                    Ok(_) => continue,
                    Err(c) => c,
                }
            };
            return Some(FailureWitness { pair: (x, y), found, needed: k });
        }
    }
    None
}

/// Decides rainbow-k-connectivity, returning `k` internally disjoint rainbow
/// paths for every pair or the first failing pair.
pub fn is_rainbow_k_connected(
    g: &Graph,
    col: &EdgeColoring,
    k: usize,
) -> Result<RainbowCertificate, FailureWitness> {
    assert!(k >= 1, "k must be positive");
    assert!(col.covers_exactly(g), "colouring does not belong to this graph");
    if let Some(w) = first_failure(g, col, k) {
        return Err(w);
    }
    let n = g.vertex_count();
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for x in 0..n {
        for y in x + 1..n {
            let paths = paths_for_pair(g, col, x, y, k).expect("pair passed the check above");
            pairs.push(PairPaths { pair: (x, y), paths });
        }
    }
    Ok(RainbowCertificate { k, colors_used: col.colors_used(), pairs })
}

/// Re-checks a certificate from scratch against the graph and colouring.
pub fn validate_certificate(
    g: &Graph,
    col: &EdgeColoring,
    cert: &RainbowCertificate,
    k: usize,
) -> Result<(), CertificateError> {
    if cert.k != k {
        return Err(CertificateError::WrongK { expected: k, found: cert.k });
    }
    let n = g.vertex_count();
    let mut seen = HashSet::new();
    for entry in &cert.pairs {
        let (x, y) = entry.pair;
        if x >= y || y >= n || !seen.insert(entry.pair) {
            return Err(CertificateError::PairCoverage(entry.pair));
        }
        if entry.paths.len() < k {
            return Err(CertificateError::TooFewPaths(entry.pair));
        }
        let mut internal = HashSet::new();
        for p in &entry.paths {
            let bad = || CertificateError::BadPath(entry.pair, p.clone());
            if p.len() < 2 || p[0] != x || *p.last().unwrap() != y {
                return Err(bad());
            }
            let distinct: HashSet<usize> = p.iter().copied().collect();
            if distinct.len() != p.len() || p.iter().any(|&v| v >= n) {
                return Err(bad());
            }
            let mut colours = HashSet::new();
            for w in p.windows(2) {
                if !g.is_adjacent(w[0], w[1]) {
                    return Err(bad());
                }
                let c = col.color(w[0], w[1]).ok_or_else(bad)?;
                if !colours.insert(c) {
                    return Err(CertificateError::NotRainbow(entry.pair, p.clone()));
                }
            }
            for &v in &p[1..p.len() - 1] {
                if !internal.insert(v) {
                    return Err(CertificateError::NotDisjoint(entry.pair));
                }
            }
        }
    }
    for x in 0..n {
        for y in x + 1..n {
            if !seen.contains(&(x, y)) {
                return Err(CertificateError::PairCoverage((x, y)));
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub struct SearchSuccess {
    /// Index of the successful attempt; its colouring used seed `seed + attempt`.
    pub attempt: u64,
    pub coloring: EdgeColoring,
    pub certificate: RainbowCertificate,
}

/// Tries `random_two_coloring(g, seed + i)` for `i = 0..attempts` and returns
/// the lowest-index colouring that is rainbow-k-connected. With `workers > 1`
/// attempts are checked in parallel; the result is the same.
pub fn search_two_coloring(
    g: &Graph,
    k: usize,
    attempts: u64,
    seed: u64,
    workers: usize,
) -> Result<Option<SearchSuccess>, RainbowError> {
    if k == 0 {
        return Err(RainbowError::InvalidK);
    }
    let kappa = vertex_connectivity_capped(g, k);
    if kappa < k {
        return Err(RainbowError::PreconditionKappa { k, kappa });
    }
    let attempt = |i: u64| {
        let coloring = random_two_coloring(g, seed.wrapping_add(i));
        first_failure(g, &coloring, k).is_none().then_some((i, coloring))
    };
    let hit = if workers <= 1 {
        (0..attempts).find_map(attempt)
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("thread pool");
        pool.install(|| (0..attempts).into_par_iter().find_map_first(attempt))
    };
    Ok(hit.map(|(attempt, coloring)| {
        let certificate = is_rainbow_k_connected(g, &coloring, k).expect("attempt passed verification");
        SearchSuccess { attempt, coloring, certificate }
    }))
}

/// Lower bound on `rc_k(g)`: one colour only admits rainbow paths of length 1,
/// so it suffices exactly when `k = 1` and `g` is complete. Graphs with fewer
/// than two vertices need no colours.
pub fn rc_lower_bound(g: &Graph, k: usize) -> usize {
    if g.vertex_count() < 2 {
        0
    } else if k == 1 && g.is_complete() {
        1
    } else {
        2
    }
}

#[derive(Debug, Clone)]
pub struct Rc2Certificate {
    pub lower_bound: usize,
    pub rc2: usize,
    /// `rc(g)`: 2 when `g` is not complete, 1 otherwise.
    pub rc1: usize,
    pub certificate: RainbowCertificate,
}

/// Establishes `rc_2(g) = 2` from a rainbow-2-connected colouring with at most
/// two colours together with the matching lower bound.
pub fn certify_rc2(g: &Graph, good: &EdgeColoring) -> Result<Rc2Certificate, RainbowError> {
    if !good.covers_exactly(g) {
        return Err(RainbowError::GraphMismatch);
    }
    let used = good.colors_used();
    if used > 2 {
        return Err(RainbowError::TooManyColors { used });
    }
    let certificate = is_rainbow_k_connected(g, good, 2).map_err(RainbowError::ColoringRejected)?;
    let lower_bound = rc_lower_bound(g, 2);
    debug_assert_eq!(lower_bound, 2);
    Ok(Rc2Certificate {
        lower_bound,
        rc2: 2,
        rc1: rc_lower_bound(g, 1).max(1),
        certificate,
    })
}
