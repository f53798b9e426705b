use std::path::PathBuf;
use std::process::Command;

use kdc::cli::{run, RunReport};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .display()
        .to_string()
}

fn scratch(name: &str, contents: &str) -> String {
    let dir = std::env::temp_dir().join(format!("kdc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.display().to_string()
}

fn run_args(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("kdc").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> RunReport {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let (code, out, err) = run_args(&full);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(": ")))
        .unwrap_or_else(|| panic!("no {key} in\n{text}"))
}

#[test]
fn solve_reports_labels() {
    let fig2 = data("figure2.txt");
    let (code, out, _) = run_args(&["solve", "--k", "1", &fig2]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "size"), "5");
    assert_eq!(field(&out, "optimal"), "true");

    let r = json(&["solve", "--k", "2", &fig2]);
    assert_eq!(r.size, Some(6));
    assert_eq!(r.vertices, ["v1", "v2", "v3", "v4", "v5", "v6"]);
    let r = json(&["solve", "--k", "0", &fig2]);
    assert_eq!(r.vertices, ["v8", "v9", "v10", "v11", "v12"]);
}

#[test]
fn other_modes() {
    let fig6 = data("figure6.txt");
    let r = json(&["heuristic", "--k", "1", "--opt", &fig6]);
    assert_eq!(r.size, Some(4));
    assert_eq!(r.vertices, ["v1", "v2", "v3", "v4"]);
    assert_eq!(json(&["heuristic", "--k", "1", &fig6]).size, Some(3));
    assert_eq!(json(&["oracle", "--k", "1", &fig6]).size, Some(4));

    let (_, out, _) = run_args(&["gamma", "--k", "3"]);
    let g: f64 = field(&out, "gamma").parse().unwrap();
    assert!((g - 1.966).abs() < 5e-4);

    let fig2 = data("figure2.txt");
    let r = json(&["topr", "--k", "0", "--r", "2", &fig2]);
    let sizes: Vec<usize> = r.cliques.iter().map(|c| c.size).collect();
    assert_eq!(sizes, [5, 4]);
    assert!(r.cliques[0].vertices.iter().all(|v| !r.cliques[1].vertices.contains(v)));

    let r = json(&["reduce", "--k", "1", &fig2]);
    let p = r.preprocess.unwrap();
    assert_eq!((p.initial_size, p.reduced_n, p.reduced_m), (5, 5, 10));
    let r = json(&["reduce", "--k", "1", "--lb", "0", &fig2]);
    assert_eq!(r.preprocess.unwrap().reduced_m, 26);
}

#[test]
fn ablation_flags_and_eq1() {
    let fig2 = data("figure2.txt");
    for flags in [&["--no-ub1"][..], &["--no-rr34"], &["--degen-only"], &["--no-ub1", "--no-rr34"]] {
        let mut args = vec!["solve", "--k", "2"];
        args.extend_from_slice(flags);
        args.push(&fig2);
        assert_eq!(json(&args).size, Some(6), "{flags:?}");
    }
    let r = json(&["solve", "--k", "1", "--compare-eq1", &fig2]);
    assert!(r.eq1_bound.unwrap() >= 5);
}

#[test]
fn reports_are_deterministic_and_round_trip() {
    let fig2 = data("figure2.txt");
    for mode in [&["solve", "--k", "2"][..], &["topr", "--k", "1", "--r", "3"], &["reduce", "--k", "2"]] {
        let mut args = mode.to_vec();
        args.push(&fig2);
        let a = json(&args).without_timings();
        let b = json(&args).without_timings();
        assert_eq!(a, b);
        let text = serde_json::to_string(&a).unwrap();
        assert_eq!(serde_json::from_str::<RunReport>(&text).unwrap(), a);
    }
}

#[test]
fn empty_and_time_limited_runs() {
    let empty = scratch("empty.txt", "# nothing here\n");
    let r = json(&["solve", "--k", "2", &empty]);
    assert_eq!((r.size, r.optimal), (Some(0), Some(true)));

    let mut text = String::new();
    let g = kdc::generate::gnp(90, 0.6, 1);
    for (u, v) in g.edges() {
        text.push_str(&format!("{u} {v}\n"));
    }
    let dense = scratch("dense.txt", &text);
    let r = json(&["solve", "--k", "4", "--time-limit", "0", &dense]);
    assert_eq!(r.optimal, Some(false));
    let (_, out, _) = run_args(&["solve", "--k", "4", "--time-limit", "0", &dense]);
    assert_eq!(field(&out, "optimal"), "false");
}

#[test]
fn exit_codes() {
    let fig2 = data("figure2.txt");
    let bad = scratch("bad.txt", "1 2\n2 3 4\n");
    assert_eq!(run_args(&["solve", "--k", "1", "/no/such/file"]).0, 2);
    let (code, _, err) = run_args(&["solve", "--k", "1", &bad]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");
    assert_eq!(run_args(&["solve", "--k", "-1", &fig2]).0, 3);
    assert_eq!(run_args(&["topr", "--k", "1", "--r", "0", &fig2]).0, 3);
    assert_eq!(run_args(&["solve", "--k", "1", "--bogus", &fig2]).0, 3);
    assert_eq!(run_args(&["solve", "--k", "1", "--time-limit", "-2", &fig2]).0, 3);
    assert_eq!(run_args(&["--version"]).0, 0);
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_kdc");
    let out = Command::new(bin)
        .args(["solve", "--k", "1", &data("figure2.txt")])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("size: 5"));
    let missing = Command::new(bin).args(["solve", "--k", "1", "/no/such/file"]).status().unwrap();
    assert_eq!(missing.code(), Some(2));
    let usage = Command::new(bin).args(["gamma", "--k", "-3"]).status().unwrap();
    assert_eq!(usage.code(), Some(3));
}
