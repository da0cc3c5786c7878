//! `nc-rainbow`: build groups and non-commuting graphs, write and verify edge
//! colourings, evaluate the union bound, and rerun the acceptance checks.
//!
//! Exit codes: 0 success, 1 a verification came out negative, 2 bad usage or
//! bad input. Errors go to stderr as one JSON object; every run also writes a
//! manifest (to `--manifest FILE`, or as a JSON line on stderr).

mod manifest;

use clap::{Args, Parser, Subcommand, ValueEnum};
use manifest::RunManifest;
use nc_rainbow::bounds::{bound_report, coarse_bound_holds, scan_exception_report, threshold_for_k};
use nc_rainbow::coloring::{j62_graph_and_coloring, prop24_coloring};
use nc_rainbow::formats::{parse_coloring, parse_graph, parse_group, write_coloring, write_graph, write_group};
use nc_rainbow::graph::{are_isomorphic, Graph, Isomorphism, PartitionSpec};
use nc_rainbow::group::{
    central_product, cyclic, cyclic_action, dicyclic, dihedral, direct_product, metacyclic,
    semidirect_product, Group,
};
use nc_rainbow::ncgraph::noncommuting_graph;
use nc_rainbow::rainbow::{is_rainbow_k_connected, search_two_coloring};
use nc_rainbow::reproduce::{format_table, run_all};
use nc_rainbow::suite::NamedGroup;
use serde_json::json;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "nc-rainbow", version, about = "Rainbow connectivity of non-commuting graphs")]
struct Cli {
    /// Write the run manifest here instead of stderr.
    #[arg(long, global = true)]
    manifest: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Group constructions.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Non-commuting graph of a group file.
    Ncgraph {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Built-in two-colourings.
    #[command(subcommand)]
    Color(ColorCmd),
    /// Check that a colouring is rainbow-k-connected.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        k: usize,
        /// Certificate output (JSON).
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Seeded search for a rainbow-k-connected random two-colouring.
    Search {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        attempts: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        out_coloring: Option<PathBuf>,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Union-bound value of a group, or the integer inequalities.
    Bounds(BoundsArgs),
    /// k = 2 bound for every `.cay` file in a directory.
    Scan {
        #[arg(long)]
        groups: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Graph isomorphism test.
    Iso {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        graph2: PathBuf,
    },
    /// Run every acceptance criterion and print a table.
    Reproduce {
        /// Single worker thread; the checks themselves are unchanged.
        #[arg(long)]
        quick: bool,
    },
}

#[derive(Subcommand, Debug)]
enum GroupCmd {
    Build {
        #[arg(long, value_enum)]
        family: Family,
        /// Whitespace- or comma-separated parameters; see the README.
        #[arg(long, allow_hyphen_values = true)]
        params: String,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Family {
    Cyclic,
    Dihedral,
    Dicyclic,
    Metacyclic,
    Direct,
    Semidirect,
    Central,
}

#[derive(Subcommand, Debug)]
enum ColorCmd {
    /// Two-colouring of K_{m[l],ln}.
    Prop24 {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out_graph: PathBuf,
        #[arg(long)]
        out_coloring: PathBuf,
    },
    /// Two-colouring of J(6,2) ∘ K̄_2.
    J62 {
        #[arg(long)]
        out_graph: PathBuf,
        #[arg(long)]
        out_coloring: PathBuf,
    },
}

#[derive(Args, Debug)]
#[command(args_conflicts_with_subcommands = true)]
struct BoundsArgs {
    #[command(subcommand)]
    sub: Option<BoundsCmd>,
    #[arg(long)]
    group: Option<PathBuf>,
    #[arg(long)]
    k: Option<u32>,
}

#[derive(Subcommand, Debug)]
enum BoundsCmd {
    /// Decide n^3 < 2^(n/6 + 2).
    Coarse {
        #[arg(long)]
        n: u64,
    },
    /// Smallest n from which sum_{i=2}^{k+1} n^i < 2^(n/6) always holds.
    Threshold {
        #[arg(long)]
        k: u32,
    },
}

/// A failed run: exit code plus a machine-readable kind.
#[derive(Debug)]
struct Failure {
    code: u8,
    kind: &'static str,
    message: String,
    detail: serde_json::Value,
}

impl Failure {
    fn usage(kind: &'static str, message: impl ToString) -> Self {
        Failure { code: 2, kind, message: message.to_string(), detail: serde_json::Value::Null }
    }

    fn negative(kind: &'static str, message: impl ToString, detail: serde_json::Value) -> Self {
        Failure { code: 1, kind, message: message.to_string(), detail }
    }
}

type Outcome = Result<serde_json::Value, Failure>;

fn read(path: &Path, m: &mut RunManifest) -> Result<String, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::usage("io", format!("{}: {e}", path.display())))?;
    m.input(path, text.as_bytes());
    Ok(text)
}

fn write(path: &Path, text: &str, m: &mut RunManifest) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::usage("io", format!("{}: {e}", path.display())))?;
    m.output(path, text.as_bytes());
    Ok(())
}

fn load_group(path: &Path, m: &mut RunManifest) -> Result<Group, Failure> {
    parse_group(&read(path, m)?).map_err(|e| Failure::usage("parse", format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path, m: &mut RunManifest) -> Result<Graph, Failure> {
    parse_graph(&read(path, m)?).map_err(|e| Failure::usage("parse", format!("{}: {e}", path.display())))
}

fn tokens(params: &str) -> Vec<&str> {
    params.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()).collect()
}

fn build_group(family: Family, params: &str, m: &mut RunManifest) -> Result<Group, Failure> {
    let t = tokens(params);
    let arity = |n: usize| {
        if t.len() == n {
            Ok(())
        } else {
            Err(Failure::usage("usage", format!("{family:?} takes {n} parameter(s), got {}", t.len())))
        }
    };
    let int = |s: &str| s.parse::<usize>().map_err(|_| Failure::usage("usage", format!("`{s}` is not a non-negative integer")));
    let element = |g: &Group, s: &str| {
        g.element_by_name(s)
            .or_else(|| s.parse().ok().filter(|&i| i < g.order()))
            .ok_or_else(|| Failure::usage("usage", format!("no element `{s}`")))
    };
    let built = match family {
        Family::Cyclic => {
            arity(1)?;
            cyclic(int(t[0])?)
        }
        Family::Dihedral => {
            arity(1)?;
            dihedral(int(t[0])?)
        }
        Family::Dicyclic => {
            arity(1)?;
            dicyclic(int(t[0])?)
        }
        Family::Metacyclic => {
            arity(2)?;
            let twist = t[1].parse::<i64>().map_err(|_| Failure::usage("usage", format!("`{}` is not an integer", t[1])))?;
            metacyclic(int(t[0])?, twist)
        }
        Family::Direct => {
            arity(2)?;
            direct_product(&load_group(Path::new(t[0]), m)?, &load_group(Path::new(t[1]), m)?)
        }
        Family::Semidirect => {
            // N file, order k of the cyclic acting group, then the image of
            // every element of N under the generator
            if t.len() < 2 {
                return Err(Failure::usage("usage", "semidirect takes a group file, an order and a permutation"));
            }
            let n = load_group(Path::new(t[0]), m)?;
            let k = int(t[1])?;
            let generator = t[2..].iter().map(|s| element(&n, s)).collect::<Result<Vec<_>, _>>()?;
            if generator.len() != n.order() {
                return Err(Failure::usage("usage", format!("permutation needs {} entries", n.order())));
            }
            let h = cyclic(k).map_err(|e| Failure::usage("group", e))?;
            semidirect_product(&n, &h, &cyclic_action(&n, k, &generator))
        }
        Family::Central => {
            arity(4)?;
            let (g, h) = (load_group(Path::new(t[0]), m)?, load_group(Path::new(t[1]), m)?);
            let (zg, zh) = (element(&g, t[2])?, element(&h, t[3])?);
            central_product(&g, &h, zg, zh)
        }
    };
    built.map_err(|e| Failure::usage("group", e))
}

fn certificate_json(cert: &nc_rainbow::rainbow::RainbowCertificate) -> String {
    serde_json::to_string_pretty(cert).expect("certificate serializes") + "\n"
}

fn run(command: &Command, m: &mut RunManifest) -> Outcome {
    match command {
        Command::Group(GroupCmd::Build { family, params, out }) => {
            let g = build_group(*family, params, m)?;
            write(out, &write_group(&g), m)?;
            Ok(json!({"order": g.order(), "center_size": g.center().len(), "abelian": g.is_abelian()}))
        }
        Command::Ncgraph { group, out } => {
            let g = load_group(group, m)?;
            let ncg = noncommuting_graph(&g).map_err(|e| Failure::usage("group", e))?;
            write(out, &write_graph(ncg.graph()), m)?;
            Ok(json!({"vertices": ncg.vertex_count(), "edges": ncg.graph().edge_count()}))
        }
        Command::Color(cmd) => {
            let (g, col, out_graph, out_coloring) = match cmd {
                ColorCmd::Prop24 { l, m: parts, n, out_graph, out_coloring } => {
                    let spec = PartitionSpec::new(*l, *parts, *n).map_err(|e| Failure::usage("invalid_spec", e))?;
                    let (g, col) = prop24_coloring(&spec);
                    (g, col, out_graph, out_coloring)
                }
                ColorCmd::J62 { out_graph, out_coloring } => {
                    let (g, col) = j62_graph_and_coloring();
                    (g, col, out_graph, out_coloring)
                }
            };
            write(out_graph, &write_graph(&g), m)?;
            write(out_coloring, &write_coloring(&col), m)?;
            Ok(json!({"vertices": g.vertex_count(), "edges": g.edge_count(), "colors": col.color_count()}))
        }
        Command::Verify { graph, coloring, k, cert } => {
            if *k == 0 {
                return Err(Failure::usage("usage", "k must be at least 1"));
            }
            let g = load_graph(graph, m)?;
            let col = parse_coloring(&read(coloring, m)?, &g).map_err(|e| Failure::usage("parse", format!("{}: {e}", coloring.display())))?;
            match is_rainbow_k_connected(&g, &col, *k) {
                Ok(c) => {
                    if let Some(path) = cert {
                        write(path, &certificate_json(&c), m)?;
                    }
                    Ok(json!({"rainbow_k_connected": true, "k": k, "colors_used": c.colors_used, "pairs": c.pairs.len()}))
                }
                Err(w) => Err(Failure::negative(
                    "not_rainbow_connected",
                    format!("pair {:?} has {} of {} internally disjoint rainbow paths", w.pair, w.found, w.needed),
                    serde_json::to_value(w).expect("witness serializes"),
                )),
            }
        }
        Command::Search { graph, k, attempts, seed, workers, out_coloring, cert } => {
            m.seed(*seed);
            let g = load_graph(graph, m)?;
            let found = search_two_coloring(&g, *k, *attempts, *seed, *workers).map_err(|e| Failure::usage("precondition", e))?;
            match found {
                Some(s) => {
                    if let Some(path) = out_coloring {
                        write(path, &write_coloring(&s.coloring), m)?;
                    }
                    if let Some(path) = cert {
                        write(path, &certificate_json(&s.certificate), m)?;
                    }
                    Ok(json!({"found": true, "attempt": s.attempt, "seed": seed.wrapping_add(s.attempt)}))
                }
                None => Err(Failure::negative(
                    "search_exhausted",
                    format!("no rainbow-{k}-connected two-colouring in {attempts} attempts"),
                    json!({"attempts": attempts, "seed": seed}),
                )),
            }
        }
        Command::Bounds(args) => match (&args.sub, &args.group, args.k) {
            (Some(BoundsCmd::Coarse { n }), ..) => {
                if *n == 0 {
                    return Err(Failure::usage("usage", "n must be positive"));
                }
                Ok(json!({"n": n, "holds": coarse_bound_holds(*n)}))
            }
            (Some(BoundsCmd::Threshold { k }), ..) => {
                if *k < 2 {
                    return Err(Failure::usage("usage", "k must be at least 2"));
                }
                Ok(json!({"k": k, "threshold": threshold_for_k(*k)}))
            }
            (None, Some(path), Some(k)) => {
                let g = load_group(path, m)?;
                let id = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
                let r = bound_report(&id, &g, k).map_err(|e| Failure::usage("bound", e))?;
                Ok(r.to_json())
            }
            _ => Err(Failure::usage("usage", "bounds needs --group FILE --k K, or a `coarse`/`threshold` subcommand")),
        },
        Command::Scan { groups, out } => {
            let mut files: Vec<PathBuf> = std::fs::read_dir(groups)
                .map_err(|e| Failure::usage("io", format!("{}: {e}", groups.display())))?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.extension().is_some_and(|x| x == "cay"))
                .collect();
            files.sort();
            let mut named = Vec::with_capacity(files.len());
            for f in &files {
                let id = f.file_stem().unwrap().to_string_lossy().into_owned();
                named.push(NamedGroup::new(id, load_group(f, m)?));
            }
            let reports = scan_exception_report(&named)
                .into_iter()
                .zip(&named)
                .map(|(r, g)| r.map(|r| r.to_json()).map_err(|e| Failure::usage("bound", format!("{}: {e}", g.id))))
                .collect::<Result<Vec<_>, _>>()?;
            let flagged = reports.iter().filter(|r| r["flagged"] == json!(true)).count();
            write(out, &(serde_json::to_string_pretty(&reports).unwrap() + "\n"), m)?;
            Ok(json!({"groups": reports.len(), "flagged": flagged}))
        }
        Command::Iso { graph, graph2 } => {
            let (a, b) = (load_graph(graph, m)?, load_graph(graph2, m)?);
            match are_isomorphic(&a, &b).map_err(|e| Failure::usage("search_budget", e))? {
                Isomorphism::Found(map) => Ok(json!({"isomorphic": true, "mapping": map})),
                Isomorphism::NotIsomorphic => Err(Failure::negative("not_isomorphic", "graphs are not isomorphic", json!({"isomorphic": false}))),
            }
        }
        Command::Reproduce { quick } => {
            let outcomes = run_all(*quick);
            print!("{}", format_table(&outcomes));
            let failed: Vec<u32> = outcomes.iter().filter(|o| !o.passed).map(|o| o.id).collect();
            if failed.is_empty() {
                Ok(json!({"criteria": outcomes.len(), "passed": outcomes.len()}))
            } else {
                Err(Failure::negative("criteria_failed", format!("criteria {failed:?} failed"), json!({"failed": failed})))
            }
        }
    }
}

fn emit_error(kind: &str, message: &str, detail: &serde_json::Value) {
    eprintln!("{}", json!({"error": {"kind": kind, "message": message, "detail": detail}}));
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            emit_error("usage", e.to_string().trim(), &serde_json::Value::Null);
            return ExitCode::from(2);
        }
    };
    let single_thread = match &cli.command {
        Command::Search { .. } => false,
        Command::Reproduce { quick } => *quick,
        _ => true,
    };
    if single_thread {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(1).build_global();
    }
    let mut manifest = RunManifest::new(&argv[1..]);
    let result = run(&cli.command, &mut manifest);
    let code = match &result {
        Ok(summary) => {
            if !matches!(cli.command, Command::Reproduce { .. }) {
                println!("{}", serde_json::to_string_pretty(summary).unwrap());
            }
            manifest.finish(0, summary.clone());
            0
        }
        Err(f) => {
            emit_error(f.kind, &f.message, &f.detail);
            manifest.finish(f.code, json!({"error": f.kind, "detail": f.detail}));
            f.code
        }
    };
    let text = manifest.to_json();
    match &cli.manifest {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text + "\n") {
                emit_error("io", &format!("{}: {e}", path.display()), &serde_json::Value::Null);
                return ExitCode::from(2);
            }
        }
        None => eprintln!("{text}"),
    }
    ExitCode::from(code)
}
