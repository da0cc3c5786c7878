use nc_rainbow::coloring::{j62_graph_and_coloring, prop24_coloring};
use nc_rainbow::formats::{parse_coloring, parse_graph, parse_group, write_coloring, write_graph, write_group};
use nc_rainbow::graph::PartitionSpec;
use nc_rainbow::group::dihedral;
use nc_rainbow::rainbow::{validate_certificate, RainbowCertificate};
use serde_json::Value;
use std::path::Path;
use std::process::{Command, Output};

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nc-rainbow")).current_dir(dir).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn stderr_lines(o: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&o.stderr).lines().map(|l| serde_json::from_str(l).expect("stderr line is JSON")).collect()
}

fn read(dir: &Path, name: &str) -> String {
    std::fs::read_to_string(dir.join(name)).unwrap()
}

#[test]
fn excluded_spec_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["color", "prop24", "--l", "1", "--m", "2", "--n", "1", "--out-graph", "g", "--out-coloring", "c"]);
    assert_eq!(code(&o), 2);
    let lines = stderr_lines(&o);
    assert_eq!(lines[0]["error"]["kind"], "invalid_spec");
    assert_eq!(lines[1]["manifest"]["exit_code"], 2);
}

#[test]
fn prop24_files_verify_and_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let o = run(d, &["color", "prop24", "--l", "1", "--m", "4", "--n", "1", "--out-graph", "g.txt", "--out-coloring", "c.txt"]);
    assert_eq!(code(&o), 0);
    let (g, col) = prop24_coloring(&PartitionSpec::new(1, 4, 1).unwrap());
    let (gt, ct) = (read(d, "g.txt"), read(d, "c.txt"));
    assert_eq!(parse_graph(&gt).unwrap(), g);
    assert_eq!(parse_coloring(&ct, &g).unwrap(), col);
    assert_eq!(write_graph(&parse_graph(&gt).unwrap()), gt);
    assert_eq!(write_coloring(&col), ct);

    let o = run(d, &["verify", "--graph", "g.txt", "--coloring", "c.txt", "--k", "2", "--cert", "cert.json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o)["rainbow_k_connected"], true);
    let cert: RainbowCertificate = serde_json::from_str(&read(d, "cert.json")).unwrap();
    validate_certificate(&g, &col, &cert, 2).unwrap();
    let raw: Value = serde_json::from_str(&read(d, "cert.json")).unwrap();
    for key in ["k", "colors_used", "pairs"] {
        assert!(raw.get(key).is_some(), "{key}");
    }
    assert!(raw["pairs"][0].get("pair").is_some() && raw["pairs"][0].get("paths").is_some());

    // k = 5 exceeds what K_{4[1],1} offers
    let o = run(d, &["verify", "--graph", "g.txt", "--coloring", "c.txt", "--k", "5"]);
    assert_eq!(code(&o), 1);
    assert_eq!(stderr_lines(&o)[0]["error"]["kind"], "not_rainbow_connected");
}

#[test]
fn group_build_round_trips_and_bounds() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(code(&run(d, &["group", "build", "--family", "dihedral", "--params", "3", "--out", "d6.cay"])), 0);
    let text = read(d, "d6.cay");
    assert_eq!(parse_group(&text).unwrap(), dihedral(3).unwrap());
    assert_eq!(write_group(&parse_group(&text).unwrap()), text);

    let o = run(d, &["bounds", "--group", "d6.cay", "--k", "2"]);
    assert_eq!(code(&o), 0);
    let r = stdout_json(&o);
    assert_eq!((r["p_num"].as_str(), r["p_den"].as_str(), r["flagged"].as_bool()), (Some("19"), Some("8"), Some(true)));
    assert_eq!(r["order"], 6);
    assert_eq!(r["center_size"], 1);

    let o = run(d, &["bounds", "coarse", "--n", "108"]);
    assert_eq!(stdout_json(&o)["holds"], false);
    let o = run(d, &["bounds", "threshold", "--k", "3"]);
    assert_eq!(stdout_json(&o)["threshold"], 180);

    assert_eq!(code(&run(d, &["group", "build", "--family", "metacyclic", "--params", "8,2", "--out", "x.cay"])), 2);
    assert_eq!(code(&run(d, &["group", "build", "--family", "cyclic", "--params", "4", "--out", "z4.cay"])), 0);
    assert_eq!(code(&run(d, &["bounds", "--group", "z4.cay", "--k", "2"])), 2);
}

#[test]
fn order_32_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    for (fam, p, out) in [("dihedral", "4", "d8.cay"), ("dicyclic", "2", "q8.cay")] {
        assert_eq!(code(&run(d, &["group", "build", "--family", fam, "--params", p, "--out", out])), 0);
    }
    let o = run(d, &["group", "build", "--family", "central", "--params", "d8.cay,q8.cay,r^2,a^2", "--out", "g32.cay", "--manifest", "m.json"]);
    assert_eq!(code(&o), 0);
    let m: Value = serde_json::from_str(&read(d, "m.json")).unwrap();
    assert_eq!(m["manifest"]["inputs"].as_array().unwrap().len(), 2);
    assert_eq!(m["manifest"]["outputs"][0]["sha256"].as_str().unwrap().len(), 64);

    assert_eq!(code(&run(d, &["ncgraph", "--group", "g32.cay", "--out", "g32.graph"])), 0);
    assert_eq!(code(&run(d, &["color", "j62", "--out-graph", "j.graph", "--out-coloring", "j.col"])), 0);
    let (jg, jc) = j62_graph_and_coloring();
    assert_eq!(parse_graph(&read(d, "j.graph")).unwrap(), jg);
    assert_eq!(parse_coloring(&read(d, "j.col"), &jg).unwrap(), jc);

    let o = run(d, &["iso", "--graph", "g32.graph", "--graph2", "j.graph"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o)["mapping"].as_array().unwrap().len(), 30);
    assert_eq!(code(&run(d, &["iso", "--graph", "g32.graph", "--graph2", "g32.graph"])), 0);
    assert_eq!(code(&run(d, &["verify", "--graph", "j.graph", "--coloring", "j.col", "--k", "2"])), 0);
}

#[test]
fn search_is_deterministic_and_scan_reads_directories() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    std::fs::create_dir(d.join("groups")).unwrap();
    for (fam, p, out) in [("dihedral", "9", "groups/d18.cay"), ("dihedral", "3", "groups/d6.cay")] {
        assert_eq!(code(&run(d, &["group", "build", "--family", fam, "--params", p, "--out", out])), 0);
    }
    std::fs::write(d.join("groups/notes.txt"), "ignored").unwrap();
    let o = run(d, &["scan", "--groups", "groups", "--out", "scan.json"]);
    assert_eq!(code(&o), 0);
    let reports: Value = serde_json::from_str(&read(d, "scan.json")).unwrap();
    let ids: Vec<&str> = reports.as_array().unwrap().iter().map(|r| r["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["d18", "d6"]);
    assert_eq!(reports[0]["flagged"], false);
    assert_eq!((reports[0]["p_num"].as_str(), reports[0]["p_den"].as_str()), (Some("6793"), Some("8192")));

    assert_eq!(code(&run(d, &["ncgraph", "--group", "groups/d18.cay", "--out", "d18.graph"])), 0);
    let mut outputs = Vec::new();
    for workers in ["1", "1", "4"] {
        let o = run(d, &["search", "--graph", "d18.graph", "--k", "2", "--attempts", "10000", "--seed", "1", "--workers", workers, "--out-coloring", "s.col"]);
        assert_eq!(code(&o), 0);
        outputs.push((stdout_json(&o), read(d, "s.col")));
    }
    assert_eq!(outputs[0], outputs[1]);
    assert_eq!(outputs[0], outputs[2]);
    assert_eq!(code(&run(d, &["verify", "--graph", "d18.graph", "--coloring", "s.col", "--k", "2"])), 0);

    // k beyond the connectivity is refused before searching
    let o = run(d, &["search", "--graph", "d18.graph", "--k", "20", "--attempts", "1", "--seed", "1"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn usage_errors_are_json() {
    let dir = tempfile::tempdir().unwrap();
    for args in [&["frobnicate"][..], &["verify", "--k", "2"], &["bounds"], &["ncgraph", "--group", "missing.cay", "--out", "x"]] {
        let o = run(dir.path(), args);
        assert_eq!(code(&o), 2, "{args:?}");
        assert!(stderr_lines(&o)[0].get("error").is_some());
    }
    let bad = dir.path().join("bad.graph");
    std::fs::write(&bad, "graph 3 1\n2 1\n").unwrap();
    let o = run(dir.path(), &["iso", "--graph", "bad.graph", "--graph2", "bad.graph"]);
    assert_eq!(code(&o), 2);
    assert!(stderr_lines(&o)[0]["error"]["message"].as_str().unwrap().contains("line 2"));
}
