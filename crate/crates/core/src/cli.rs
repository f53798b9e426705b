//! Command-line front end.
//!
//! Exit codes: 0 on success (including time-limited runs), 2 when the input
//! cannot be read or parsed, 3 for invalid arguments.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufReader, Write};
use std::path::PathBuf;
use std::time::Duration;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::bounds::{color_candidates, ub_coloring_basic};
use crate::config::SolverConfig;
use crate::graph::{load_edge_list, Graph};
use crate::instance::Instance;
use crate::preprocess::{degen, degen_opt, preprocess, PreprocessReport};
use crate::search::{kdc, top_r_diversified, RuleFires, SolverResult};
use crate::verify::{brute_force_max, gamma_k, OracleBudget};

pub const FORMAT_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "kdc", version, about = "Maximum k-defective clique search")]
struct Cli {
    #[command(subcommand)]
    mode: Mode,
}

#[derive(Subcommand, Debug)]
enum Mode {
    /// Exact maximum k-defective clique
    Solve(SolveArgs),
    /// Degeneracy-based heuristic solution only
    Heuristic(HeuristicArgs),
    /// Exhaustive search, small graphs only
    Oracle(GraphArgs),
    /// Greedy vertex-disjoint cliques, each maximum in what is left
    Topr(TopRArgs),
    /// Branching factor base for budget k
    Gamma(GammaArgs),
    /// Heuristic plus global core/truss reduction, no search
    Reduce(ReduceArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct GraphArgs {
    /// Non-edge budget
    #[arg(long = "k", allow_negative_numbers = true)]
    k: i64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Edge list: one `u v` pair per line, `#` or `%` comments
    input: PathBuf,
}

#[derive(Args, Debug)]
struct Toggles {
    /// Time limit in seconds
    #[arg(long = "time-limit")]
    time_limit: Option<f64>,
    /// Disable the coloring bound
    #[arg(long)]
    no_ub1: bool,
    /// Disable the two lb-driven candidate filters
    #[arg(long)]
    no_rr34: bool,
    /// Plain degeneracy heuristic and no truss peeling
    #[arg(long)]
    degen_only: bool,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[command(flatten)]
    toggles: Toggles,
    /// Also report the classic coloring bound of the whole graph
    #[arg(long)]
    compare_eq1: bool,
}

#[derive(Args, Debug)]
struct HeuristicArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Per-vertex neighborhood variant
    #[arg(long)]
    opt: bool,
}

#[derive(Args, Debug)]
struct TopRArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Number of cliques
    #[arg(long = "r", allow_negative_numbers = true)]
    r: i64,
    #[command(flatten)]
    toggles: Toggles,
}

#[derive(Args, Debug)]
struct GammaArgs {
    #[arg(long = "k", allow_negative_numbers = true)]
    k: i64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct ReduceArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Lower bound to reduce against; defaults to the heuristic size
    #[arg(long)]
    lb: Option<usize>,
    #[arg(long)]
    degen_only: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct PreprocessSummary {
    pub initial_size: usize,
    pub reduced_n: usize,
    pub reduced_m: usize,
    pub elapsed_ms: f64,
}

impl PreprocessSummary {
    fn from_report(r: &PreprocessReport) -> Self {
        Self {
            initial_size: r.initial_size,
            reduced_n: r.reduced_n,
            reduced_m: r.reduced_m,
            elapsed_ms: millis(r.elapsed),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ReportStats {
    pub nodes: u64,
    pub leaves: u64,
    pub bound_prunes: u64,
    pub rule_fires: RuleFires,
    pub max_depth: usize,
    pub elapsed_ms: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preprocess: Option<PreprocessSummary>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CliqueRecord {
    pub size: usize,
    pub vertices: Vec<String>,
    pub optimal: bool,
}

/// Everything one invocation prints.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub format_version: u32,
    pub mode: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    pub k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub size: Option<usize>,
    #[serde(default)]
    pub vertices: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub optimal: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stats: Option<ReportStats>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eq1_bound: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cliques: Vec<CliqueRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preprocess: Option<PreprocessSummary>,
}

impl RunReport {
    fn new(mode: &str, input: Option<&PathBuf>, k: usize) -> Self {
        Self {
            format_version: FORMAT_VERSION,
            mode: mode.to_owned(),
            input: input.map(|p| p.display().to_string()),
            k,
            size: None,
            vertices: Vec::new(),
            optimal: None,
            stats: None,
            eq1_bound: None,
            cliques: Vec::new(),
            gamma: None,
            preprocess: None,
        }
    }

    /// Zeroes every wall-clock field so two runs can be compared byte for
    /// byte.
    pub fn without_timings(mut self) -> Self {
        if let Some(s) = &mut self.stats {
            s.elapsed_ms = 0.0;
            if let Some(p) = &mut s.preprocess {
                p.elapsed_ms = 0.0;
            }
        }
        if let Some(p) = &mut self.preprocess {
            p.elapsed_ms = 0.0;
        }
        self
    }
}

fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1000.0
}

fn labels(g: &Graph, set: &[usize]) -> Vec<String> {
    set.iter().map(|&v| g.label(v).to_owned()).collect()
}

fn stats_of(res: &SolverResult) -> ReportStats {
    let s = &res.stats;
    ReportStats {
        nodes: s.nodes,
        leaves: s.leaves,
        bound_prunes: s.bound_prunes,
        rule_fires: s.rule_fires,
        max_depth: s.max_depth,
        elapsed_ms: millis(s.elapsed),
        preprocess: s.preprocess.as_ref().map(PreprocessSummary::from_report),
    }
}

/// Renders a report as `key: value` lines or as one JSON object.
pub fn emit_report(report: &RunReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => text_report(report),
    }
}

fn text_report(r: &RunReport) -> String {
    let mut lines = vec![
        format!("format_version: {}", r.format_version),
        format!("mode: {}", r.mode),
    ];
    if let Some(input) = &r.input {
        lines.push(format!("input: {input}"));
    }
    lines.push(format!("k: {}", r.k));
    if let Some(g) = r.gamma {
        lines.push(format!("gamma: {g:.12}"));
    }
    if let Some(size) = r.size {
        lines.push(format!("size: {size}"));
        lines.push(format!("vertices: {}", r.vertices.join(" ")));
    }
    if let Some(opt) = r.optimal {
        lines.push(format!("optimal: {opt}"));
    }
    if let Some(b) = r.eq1_bound {
        lines.push(format!("eq1_bound: {b}"));
    }
    for (i, c) in r.cliques.iter().enumerate() {
        lines.push(format!("clique.{}.size: {}", i + 1, c.size));
        lines.push(format!("clique.{}.vertices: {}", i + 1, c.vertices.join(" ")));
        lines.push(format!("clique.{}.optimal: {}", i + 1, c.optimal));
    }
    if let Some(s) = &r.stats {
        let f = &s.rule_fires;
        lines.push(format!("nodes: {}", s.nodes));
        lines.push(format!("leaves: {}", s.leaves));
        lines.push(format!("bound_prunes: {}", s.bound_prunes));
        lines.push(format!(
            "rule_fires: rr1={} rr2={} rr3={} rr4={} rr5={} rr5_prunes={}",
            f.rr1, f.rr2, f.rr3, f.rr4, f.rr5, f.rr5_prunes
        ));
        lines.push(format!("max_depth: {}", s.max_depth));
        lines.push(format!("elapsed_ms: {:.3}", s.elapsed_ms));
        if let Some(p) = &s.preprocess {
            push_preprocess(&mut lines, p);
        }
    }
    if let Some(p) = &r.preprocess {
        push_preprocess(&mut lines, p);
    }
    let mut out = lines.join("\n");
    out.push('\n');
    out
}

fn push_preprocess(lines: &mut Vec<String>, p: &PreprocessSummary) {
    lines.push(format!("preprocess.initial_size: {}", p.initial_size));
    lines.push(format!("preprocess.reduced_n: {}", p.reduced_n));
    lines.push(format!("preprocess.reduced_m: {}", p.reduced_m));
    lines.push(format!("preprocess.elapsed_ms: {:.3}", p.elapsed_ms));
}

enum Failure {
    Input(String),
    Usage(String),
}

fn budget(k: i64) -> Result<usize, Failure> {
    usize::try_from(k).map_err(|_| Failure::Usage(format!("--k must be non-negative, got {k}")))
}

fn load(path: &PathBuf, stderr: &mut dyn Write) -> Result<Graph, Failure> {
    let file = File::open(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let (g, report) = load_edge_list(BufReader::new(file))
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    if report.duplicates > 0 || report.self_loops > 0 {
        let _ = writeln!(
            stderr,
            "note: ignored {} duplicate edges and {} self-loops",
            report.duplicates, report.self_loops
        );
    }
    Ok(g)
}

fn solver_config(k: usize, t: &Toggles) -> Result<SolverConfig, Failure> {
    let mut cfg = SolverConfig::new(k);
    if let Some(secs) = t.time_limit {
        let limit = Duration::try_from_secs_f64(secs)
            .map_err(|_| Failure::Usage(format!("--time-limit must be a non-negative number, got {secs}")))?;
        cfg = cfg.with_time_limit(limit);
    }
    if t.no_ub1 {
        cfg = cfg.without_ub1();
    }
    if t.no_rr34 {
        cfg = cfg.without_rr34();
    }
    if t.degen_only {
        cfg = cfg.degen_only();
    }
    Ok(cfg)
}

fn execute(mode: Mode, stderr: &mut dyn Write) -> Result<(RunReport, Format), Failure> {
    match mode {
        Mode::Solve(a) => {
            let k = budget(a.graph.k)?;
            let cfg = solver_config(k, &a.toggles)?;
            let g = load(&a.graph.input, stderr)?;
            let res = kdc(&g, &cfg);
            let mut report = RunReport::new("solve", Some(&a.graph.input), k);
            report.size = Some(res.size);
            report.vertices = labels(&g, &res.best);
            report.optimal = Some(res.optimal);
            report.stats = Some(stats_of(&res));
            if a.compare_eq1 {
                let inst = Instance::new(&g, k);
                report.eq1_bound = Some(ub_coloring_basic(0, k, &color_candidates(&inst)));
            }
            Ok((report, a.graph.format))
        }
        Mode::Heuristic(a) => {
            let k = budget(a.graph.k)?;
            let g = load(&a.graph.input, stderr)?;
            let set = if a.opt { degen_opt(&g, k) } else { degen(&g, k) };
            let mut report = RunReport::new("heuristic", Some(&a.graph.input), k);
            report.size = Some(set.len());
            report.vertices = labels(&g, &set);
            Ok((report, a.graph.format))
        }
        Mode::Oracle(a) => {
            let k = budget(a.k)?;
            let g = load(&a.input, stderr)?;
            let set = brute_force_max(&g, k, OracleBudget::default())
                .map_err(|e| Failure::Input(e.to_string()))?;
            let mut report = RunReport::new("oracle", Some(&a.input), k);
            report.size = Some(set.len());
            report.vertices = labels(&g, &set);
            report.optimal = Some(true);
            Ok((report, a.format))
        }
        Mode::Topr(a) => {
            let k = budget(a.graph.k)?;
            if a.r < 1 {
                return Err(Failure::Usage(format!("--r must be at least 1, got {}", a.r)));
            }
            let cfg = solver_config(k, &a.toggles)?;
            let g = load(&a.graph.input, stderr)?;
            let results = top_r_diversified(&g, a.r as usize, &cfg);
            let mut report = RunReport::new("topr", Some(&a.graph.input), k);
            report.cliques = results
                .iter()
                .map(|res| CliqueRecord {
                    size: res.size,
                    vertices: labels(&g, &res.best),
                    optimal: res.optimal,
                })
                .collect();
            report.size = Some(results.iter().map(|r| r.size).sum());
            let mut covered: Vec<usize> = results.iter().flat_map(|r| r.best.iter().copied()).collect();
            covered.sort_unstable();
            report.vertices = labels(&g, &covered);
            report.optimal = Some(results.iter().all(|r| r.optimal));
            Ok((report, a.graph.format))
        }
        Mode::Gamma(a) => {
            let k = budget(a.k)?;
            let mut report = RunReport::new("gamma", None, k);
            report.gamma = Some(gamma_k(k));
            Ok((report, a.format))
        }
        Mode::Reduce(a) => {
            let k = budget(a.graph.k)?;
            let g = load(&a.graph.input, stderr)?;
            let mut cfg = SolverConfig::new(k);
            if a.degen_only {
                cfg = cfg.degen_only();
            }
            let mut report = RunReport::new("reduce", Some(&a.graph.input), k);
            let summary = match a.lb {
                None => {
                    let (_, rep) = preprocess(&g, &cfg);
                    report.size = Some(rep.initial_size);
                    report.vertices = labels(&g, &rep.initial_clique);
                    PreprocessSummary::from_report(&rep)
                }
                Some(lb) => {
                    let start = std::time::Instant::now();
                    let r = crate::preprocess::global_reduce_with(&g, lb, k, cfg.enable_rr6);
                    PreprocessSummary {
                        initial_size: lb,
                        reduced_n: r.graph.n(),
                        reduced_m: r.graph.m(),
                        elapsed_ms: millis(start.elapsed()),
                    }
                }
            };
            report.preprocess = Some(summary);
            Ok((report, a.graph.format))
        }
    }
}

/// Parses `argv` (program name first), runs the selected mode and writes the
/// report. Returns the process exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli.mode, stderr) {
        Ok((report, format)) => {
            let _ = stdout.write_all(emit_report(&report, format).as_bytes());
            EXIT_OK
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("kdc").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn gamma_text_and_json() {
        let (code, out, _) = run_str(&["gamma", "--k", "3"]);
        assert_eq!(code, 0);
        let value: f64 = out
            .lines()
            .find_map(|l| l.strip_prefix("gamma: "))
            .unwrap()
            .parse()
            .unwrap();
        assert!((value - 1.966).abs() < 5e-4, "{out}");
        let (code, out, _) = run_str(&["gamma", "--k", "0", "--format", "json"]);
        assert_eq!(code, 0);
        let r: RunReport = serde_json::from_str(&out).unwrap();
        assert!((r.gamma.unwrap() - 1.618034).abs() < 1e-6);
    }

    #[test]
    fn bad_arguments() {
        assert_eq!(run_str(&["gamma", "--k", "-1"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["solve", "--k", "1"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["--help"]).0, EXIT_OK);
        assert_eq!(run_str(&["solve", "--k", "1", "/definitely/not/here.txt"]).0, EXIT_INPUT);
    }

    #[test]
    fn empty_report_round_trips() {
        let mut r = RunReport::new("solve", None, 0);
        r.size = Some(0);
        r.optimal = Some(true);
        r.stats = Some(ReportStats::default());
        let back: RunReport = serde_json::from_str(&emit_report(&r, Format::Json)).unwrap();
        assert_eq!(back, r);
        let text = emit_report(&r, Format::Text);
        assert!(text.contains("size: 0\n"));
        assert!(text.contains("optimal: true\n"));
    }
}
