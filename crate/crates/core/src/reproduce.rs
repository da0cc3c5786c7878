//! End-to-end checks of every claim the library can verify, one function per
//! criterion. Each returns a [`CriterionOutcome`]; a panic inside a check is
//! caught by [`run_all`] and reported as a failure.

use crate::bounds::{
    coarse_bound_holds, failure_bound, mid_bound, scan_exception_report, threshold_for_k,
    threshold_inequality_holds,
};
use crate::coloring::{j62_graph_and_coloring, prop24_coloring, EdgeColoring};
use crate::graph::{
    are_isomorphic, complete, detect_complete_multipartite, vertex_connectivity, Graph,
    Isomorphism, PartitionSpec,
};
use crate::group::{dicyclic, dihedral, Group};
use crate::ncgraph::{lemma21_check, lemma22_check, noncommuting_graph};
use crate::rainbow::{
    certify_rc2, count_short_rainbow_paths, is_rainbow_k_connected, max_disjoint_rainbow_paths,
    rc_lower_bound, search_two_coloring, validate_certificate,
};
use crate::suite::{extraspecial_32, common_neighbor_suite, scan_suite, NamedGroup};
use crate::ExactRational;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;
use rayon::prelude::*;
use serde::Serialize;
use std::fmt::Write as _;
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Attempt budget for the k = 2 searches.
pub const SEARCH_ATTEMPTS: u64 = 10_000;
/// Attempt budget for the k = 3 search on `Γ(D14)`.
pub const K3_ATTEMPTS: u64 = 10_000;
pub const THRESHOLD_K2: u64 = 126;
pub const THRESHOLD_K3: u64 = 180;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionOutcome {
    pub id: u32,
    pub title: String,
    pub passed: bool,
    pub detail: String,
}

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn q(n: i64, d: i64) -> ExactRational {
    ExactRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn common_neighbor_bound() -> Check {
    let suite = common_neighbor_suite();
    let mut pairs = 0;
    let mut tightest = (String::new(), 1.0f64);
    for g in &suite {
        let report = lemma21_check(&g.group).map_err(|e| format!("{}: {e}", g.id))?;
        pairs += report.pairs_checked;
        let ratio = report.min_tau as f64 / report.order as f64;
        if ratio < tightest.1 {
            tightest = (g.id.clone(), ratio);
        }
    }
    Ok(format!(
        "{} groups, {pairs} pairs; smallest tau/|G| = {:.4} ({})",
        suite.len(),
        tightest.1,
        tightest.0
    ))
}

pub fn multipartite_structure() -> Check {
    let detect = |g: Group| {
        let ncg = noncommuting_graph(&g).map_err(|e| e.to_string())?;
        detect_complete_multipartite(ncg.graph()).map_err(|e| e.to_string())
    };
    let expect = |small: usize, count: usize, big: usize| {
        let mut v = vec![small; count];
        v.push(big);
        v.sort_unstable();
        v
    };
    let mut checked = 0;
    for n in [3, 5, 7, 9] {
        let parts = detect(dihedral(n).unwrap())?;
        ensure(parts == expect(1, n, n - 1), || format!("D{}: parts {parts:?}", 2 * n))?;
        checked += 1;
    }
    for n in [4, 6, 8, 10] {
        let parts = detect(dihedral(n).unwrap())?;
        ensure(parts == expect(2, n / 2, n - 2), || format!("D{}: parts {parts:?}", 2 * n))?;
        checked += 1;
    }
    for m in 2..=6 {
        let parts = detect(dicyclic(m).unwrap())?;
        ensure(parts == expect(2, m, 2 * m - 2), || format!("Q{}: parts {parts:?}", 4 * m))?;
        checked += 1;
    }
    Ok(format!("{checked} graphs with the expected part sizes"))
}

pub fn product_isomorphism() -> Check {
    let cases = [(dihedral(3), 2), (dihedral(3), 3), (dihedral(4), 3), (dicyclic(2), 3)];
    let mut out = Vec::new();
    for (g, n) in cases {
        let g = g.unwrap();
        let r = lemma22_check(&g, n).map_err(|e| e.to_string())?;
        out.push(format!("|G|={} n={n}: {} vertices", g.order(), r.vertices));
    }
    Ok(out.join("; "))
}

/// The grid of `(l, m, n)` covered by the multipartite construction check.
pub fn prop24_grid() -> Vec<(usize, usize, usize)> {
    let mut grid = Vec::new();
    grid.extend((2..=5).map(|l| (l, 2, 1)));
    grid.extend((1..=3).map(|l| (l, 3, 1)));
    for l in 1..=3 {
        grid.extend((4..=6).map(|m| (l, m, 1)));
    }
    for l in 1..=2 {
        grid.extend((3..=5).map(|m| (l, m, 2)));
    }
    grid.extend((4..=5).map(|m| (1, m, 3)));
    grid
}

pub fn multipartite_colorings() -> Check {
    for (l, m, n) in prop24_grid() {
        let spec = PartitionSpec::new(l, m, n).map_err(|e| e.to_string())?;
        let (g, col) = prop24_coloring(&spec);
        let cert = certify_rc2(&g, &col).map_err(|e| format!("({l},{m},{n}): {e}"))?;
        validate_certificate(&g, &col, &cert.certificate, 2).map_err(|e| format!("({l},{m},{n}): {e}"))?;
        ensure(cert.lower_bound == 2 && cert.rc2 == 2, || format!("({l},{m},{n}): lower bound"))?;
    }
    Ok(format!("rc_2 = 2 certified for {} parameter triples", prop24_grid().len()))
}

pub fn triangle_exclusion() -> Check {
    let k3 = complete(3);
    let edges: Vec<(usize, usize)> = k3.edges().collect();
    let colorings = |c: u16| {
        let total = (c as usize).pow(3);
        let edges = edges.clone();
        (0..total).map(move |code| {
            let digit = |i: u32| (code / (c as usize).pow(i) % c as usize) as u16 + 1;
            let assignment: Vec<_> = edges.iter().enumerate().map(|(i, &(u, v))| (u, v, digit(i as u32))).collect();
            (code, assignment)
        })
    };
    let mut failing = 0;
    for (code, assignment) in colorings(2) {
        let col = EdgeColoring::from_assignments(&k3, 2, assignment).map_err(|e| e.to_string())?;
        ensure(is_rainbow_k_connected(&k3, &col, 2).is_err(), || format!("two-colouring {code} passes"))?;
        failing += 1;
    }
    let passing = colorings(3)
        .filter(|(_, a)| {
            let col = EdgeColoring::from_assignments(&k3, 3, a.clone()).unwrap();
            is_rainbow_k_connected(&k3, &col, 2).is_ok()
        })
        .count();
    ensure(failing == 8, || format!("{failing} two-colourings enumerated"))?;
    ensure(passing > 0, || "no three-colouring passes".into())?;
    Ok(format!("all 8 two-colourings fail; {passing} of 27 three-colourings pass"))
}

pub fn exception_scan() -> Check {
    ensure(failure_bound(&dihedral(3).unwrap(), 2).unwrap() == q(19, 8), || "D6 value".into())?;
    ensure(failure_bound(&dihedral(4).unwrap(), 2).unwrap() == q(63, 16), || "D8 value".into())?;
    let suite = scan_suite();
    let reports = scan_exception_report(&suite);
    let mut flagged = Vec::new();
    let mut largest_passing: Option<(String, ExactRational)> = None;
    for (g, r) in suite.iter().zip(reports) {
        let r = r.map_err(|e| format!("{}: {e}", g.id))?;
        ensure(r.flagged == g.expected_exception, || {
            format!("{}: value {} flagged={} expected={}", g.id, r.value, r.flagged, g.expected_exception)
        })?;
        if r.flagged {
            flagged.push(g.id.clone());
        } else if largest_passing.as_ref().is_none_or(|(_, v)| r.value > *v) {
            largest_passing = Some((g.id.clone(), r.value.clone()));
        }
    }
    let (id, v) = largest_passing.ok_or("nothing passes")?;
    Ok(format!(
        "{} groups scanned; flagged exactly the {} listed ({}); largest passing value {} ({id})",
        suite.len(),
        flagged.len(),
        flagged.join(" "),
        v
    ))
}

pub fn johnson_product() -> Check {
    let (g, col) = j62_graph_and_coloring();
    ensure(g.vertex_count() == 30 && g.edge_count() == 240, || {
        format!("{} vertices, {} edges", g.vertex_count(), g.edge_count())
    })?;
    let cert = certify_rc2(&g, &col).map_err(|e| e.to_string())?;
    validate_certificate(&g, &col, &cert.certificate, 2).map_err(|e| e.to_string())?;
    for named in extraspecial_32() {
        let ncg = noncommuting_graph(&named.group).map_err(|e| e.to_string())?;
        match are_isomorphic(ncg.graph(), &g).map_err(|e| e.to_string())? {
            Isomorphism::Found(_) => {}
            Isomorphism::NotIsomorphic => return Err(format!("{} is not isomorphic", named.id)),
        }
    }
    Ok("30 vertices, 240 edges, rainbow-2-connected; both order-32 graphs isomorphic to it".into())
}

/// A certified rainbow-2-connected two-colouring of `Γ(G)` for a listed
/// exception: the multipartite or Johnson construction carried over by an
/// isomorphism, or a seeded search when neither shape applies.
fn exception_coloring(g: &NamedGroup) -> Result<(Graph, EdgeColoring, &'static str), String> {
    let graph = noncommuting_graph(&g.group).map_err(|e| e.to_string())?.into_graph();
    let candidate = match detect_complete_multipartite(&graph).ok().and_then(|p| PartitionSpec::from_part_sizes(&p)) {
        Some(spec) => Some((prop24_coloring(&spec), "multipartite construction")),
        None if graph.vertex_count() == 30 => Some((j62_graph_and_coloring(), "Johnson construction")),
        None => None,
    };
    if let Some(((model, col), how)) = candidate {
        if let Isomorphism::Found(map) = are_isomorphic(&model, &graph).map_err(|e| e.to_string())? {
            let moved = col.transport(&graph, &map).map_err(|e| e.to_string())?;
            return Ok((graph, moved, how));
        }
    }
    let found = search_two_coloring(&graph, 2, SEARCH_ATTEMPTS, 1, 1).map_err(|e| e.to_string())?;
    let s = found.ok_or_else(|| format!("{}: no construction and search failed", g.id))?;
    Ok((graph, s.coloring, "search"))
}

pub fn constructive_shadow(workers: usize) -> Check {
    let suite = scan_suite();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(workers.max(1)).build().map_err(|e| e.to_string())?;
    let results: Vec<Result<&'static str, String>> = pool.install(|| {
        suite
            .par_iter()
            .map(|g| {
                let (graph, col, how) = if g.expected_exception {
                    exception_coloring(g)?
                } else {
                    let graph = noncommuting_graph(&g.group).map_err(|e| e.to_string())?.into_graph();
                    let found = search_two_coloring(&graph, 2, SEARCH_ATTEMPTS, 1, 1)
                        .map_err(|e| format!("{}: {e}", g.id))?
                        .ok_or_else(|| format!("{}: search failed in {SEARCH_ATTEMPTS} attempts", g.id))?;
                    (graph, found.coloring, "search")
                };
                let cert = certify_rc2(&graph, &col).map_err(|e| format!("{}: {e}", g.id))?;
                validate_certificate(&graph, &col, &cert.certificate, 2).map_err(|e| format!("{}: {e}", g.id))?;
                Ok(how)
            })
            .collect()
    });
    let mut tally = std::collections::BTreeMap::new();
    for r in results {
        *tally.entry(r?).or_insert(0) += 1;
    }
    let mut detail = format!("rc_2 = 2 certified for all {} groups:", suite.len());
    for (how, count) in tally {
        let _ = write!(detail, " {count} by {how};");
    }
    Ok(detail.trim_end_matches(';').to_string())
}

pub fn inequality_chain() -> Check {
    if let Some(n) = (114..=2000).find(|&n| !coarse_bound_holds(n)) {
        return Err(format!("coarse inequality fails at n = {n}"));
    }
    ensure(!coarse_bound_holds(108), || "coarse inequality holds at 108".into())?;
    let mut pairs = 0;
    for n in 2..=300u64 {
        for z in (1..n).filter(|z| n % z == 0) {
            let m = mid_bound(n, z);
            ensure(m.cmp_coarse().is_lt(), || format!("mid bound exceeds coarse form at n={n} z={z}"))?;
            pairs += 1;
        }
    }
    Ok(format!("coarse inequality on 114..=2000, fails at 108; mid < coarse on {pairs} (n, z) pairs"))
}

pub fn higher_connectivity(attempts: u64) -> Check {
    let d6 = failure_bound(&dihedral(3).unwrap(), 3).map_err(|e| e.to_string())?;
    ensure(d6 == q(55, 8), || format!("D6 k=3 value {d6}"))?;
    let d14 = dihedral(7).unwrap();
    let graph = noncommuting_graph(&d14).map_err(|e| e.to_string())?.into_graph();
    let kappa = vertex_connectivity(&graph);
    ensure(kappa >= 3, || format!("kappa(D14) = {kappa}"))?;
    let found = search_two_coloring(&graph, 3, attempts, 1, 1)
        .map_err(|e| e.to_string())?
        .ok_or_else(|| format!("no rainbow-3-connected two-colouring in {attempts} attempts"))?;
    validate_certificate(&graph, &found.coloring, &found.certificate, 3).map_err(|e| e.to_string())?;
    ensure(rc_lower_bound(&graph, 3) == 2, || "lower bound".into())?;
    let (t2, t3) = (threshold_for_k(2), threshold_for_k(3));
    ensure(t2 == THRESHOLD_K2 && t3 == THRESHOLD_K3, || format!("thresholds {t2}, {t3}"))?;
    ensure(threshold_inequality_holds(126, 2) && !threshold_inequality_holds(120, 2), || "hand check".into())?;
    Ok(format!(
        "D6 k=3 value 55/8; kappa(D14) = {kappa}, rc_3 = 2 at attempt {}; thresholds k=2: {t2}, k=3: {t3}",
        found.attempt
    ))
}

/// Minimum vertex cut by trying every vertex subset.
pub fn brute_force_connectivity(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut best = n.saturating_sub(1);
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size >= best || n - size < 2 {
            continue;
        }
        let keep: Vec<usize> = (0..n).filter(|v| mask & (1 << v) == 0).collect();
        let mut seen = vec![false; n];
        let mut stack = vec![keep[0]];
        seen[keep[0]] = true;
        while let Some(v) = stack.pop() {
            for w in g.neighbor_iter(v) {
                if mask & (1 << w) == 0 && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if keep.iter().any(|&v| !seen[v]) {
            best = size;
        }
    }
    best
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    Graph::from_fn(crate::graph::default_labels(n), |_, _| rng.gen_bool(p)).expect("simple graph")
}

pub fn oracle_equivalences(seed: u64, graphs: usize) -> Check {
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
    let mut pairs = 0;
    for t in 0..graphs {
        let n = rng.gen_range(2..=12);
        let p = rng.gen_range(0.2..0.9);
        let g = random_graph(&mut rng, n, p);
        let col = EdgeColoring::from_fn(&g, 2, |_, _| rng.gen_range(1..=2)).ok();
        if let Some(col) = col {
            for x in 0..n {
                for y in x + 1..n {
                    let (fast, slow) = (count_short_rainbow_paths(&g, &col, x, y), max_disjoint_rainbow_paths(&g, &col, x, y));
                    ensure(fast == slow, || format!("graph {t}, pair ({x},{y}): {fast} vs {slow}"))?;
                    pairs += 1;
                }
            }
        }
        let (flow, brute) = (vertex_connectivity(&g), brute_force_connectivity(&g));
        ensure(flow == brute, || format!("graph {t}: connectivity {flow} vs {brute}"))?;
    }
    Ok(format!("{graphs} random graphs: {pairs} pairs agree on path counts, all connectivities agree"))
}

pub const TITLES: [&str; 11] = [
    "common-neighbour bound",
    "multipartite structure",
    "product isomorphism",
    "multipartite colourings",
    "triangle exclusion",
    "exception scan",
    "J(6,2) lexicographic product",
    "constructive search",
    "inequality chain",
    "higher connectivity",
    "oracle equivalences",
];

/// Runs criterion `id` (1-based). `quick` caps thread use at one worker and
/// is otherwise identical.
pub fn run_criterion(id: u32, quick: bool) -> CriterionOutcome {
    let workers = if quick { 1 } else { rayon::current_num_threads() };
    let check = || -> Check {
        match id {
            1 => common_neighbor_bound(),
            2 => multipartite_structure(),
            3 => product_isomorphism(),
            4 => multipartite_colorings(),
            5 => triangle_exclusion(),
            6 => exception_scan(),
            7 => johnson_product(),
            8 => constructive_shadow(workers),
            9 => inequality_chain(),
            10 => higher_connectivity(K3_ATTEMPTS),
            11 => oracle_equivalences(0x5eed, 200),
            _ => Err(format!("no criterion {id}")),
        }
    };
    let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|payload| {
        let msg = payload
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into());
        Err(format!("panicked: {msg}"))
    });
    let title = TITLES.get(id as usize - 1).copied().unwrap_or("unknown").to_string();
    match result {
        Ok(detail) => CriterionOutcome { id, title, passed: true, detail },
        Err(detail) => CriterionOutcome { id, title, passed: false, detail },
    }
}

pub fn run_all(quick: bool) -> Vec<CriterionOutcome> {
    (1..=11).map(|id| run_criterion(id, quick)).collect()
}

pub fn format_table(outcomes: &[CriterionOutcome]) -> String {
    let mut out = String::new();
    for o in outcomes {
        let _ = writeln!(out, "[{}] {:>2} {:<30} {}", if o.passed { "PASS" } else { "FAIL" }, o.id, o.title, o.detail);
    }
    out
}
