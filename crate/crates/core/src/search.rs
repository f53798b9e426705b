//! Branch-and-bound search.
//!
//! [`kdc`] is the practical solver: heuristic start, global reduction, then
//! a search that applies every reduction rule and upper bound at each node.
//! [`kdc_t`] keeps only the branching rule and RR1/RR2 and serves as a
//! reference implementation for differential tests.
//!
//! Both share one iterative engine over a single [`Instance`]; nothing is
//! copied per node, backtracking rolls the instance's trail back.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::bounds::combined_upper_bound;
use crate::config::SolverConfig;
use crate::instance::{Checkpoint, Instance};
use crate::preprocess::{preprocess, PreprocessReport, ReducedGraph};
use crate::reductions::{apply_all, rr1_rr2_fixpoint, Action, ReductionLog, Rule};
use crate::graph::Graph;
use crate::verify::is_k_defective;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleFires {
    pub rr1: u64,
    pub rr2: u64,
    pub rr3: u64,
    pub rr4: u64,
    pub rr5: u64,
    /// Nodes discarded because core peeling reached a member of `S`.
    pub rr5_prunes: u64,
}

impl RuleFires {
    fn record(&mut self, log: &ReductionLog) {
        for a in &log.actions {
            if a.action == Action::Pruned {
                self.rr5_prunes += 1;
                continue;
            }
            match a.rule {
                Rule::Rr1 => self.rr1 += 1,
                Rule::Rr2 => self.rr2 += 1,
                Rule::Rr3 => self.rr3 += 1,
                Rule::Rr4 => self.rr4 += 1,
                Rule::Rr5 => self.rr5 += 1,
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub leaves: u64,
    pub bound_prunes: u64,
    pub rule_fires: RuleFires,
    pub max_depth: usize,
    /// Longest run of consecutive left children whose reductions changed
    /// nothing.
    pub max_idle_left_chain: usize,
    /// Incumbent size after each improvement, starting with the initial one.
    pub lb_history: Vec<usize>,
    pub elapsed: Duration,
    pub preprocess: Option<PreprocessReport>,
}

#[derive(Clone, Debug)]
pub struct SolverResult {
    /// Vertices of the best solution, ascending.
    pub best: Vec<usize>,
    pub size: usize,
    /// `false` iff the time limit stopped the search.
    pub optimal: bool,
    pub stats: SearchStats,
}

/// Candidates the branching rule may pick: those with a non-neighbor in `S`
/// or, if there are none, every candidate.
pub fn branch_candidates(inst: &Instance<'_>) -> Vec<usize> {
    let mut out: Vec<usize> = inst
        .candidates()
        .iter()
        .copied()
        .filter(|&v| inst.nn_in_s(v) > 0)
        .collect();
    if out.is_empty() {
        out = inst.candidates().to_vec();
    }
    out.sort_unstable();
    out
}

/// Branching vertex: most non-neighbors in `S`, or if every candidate sees
/// all of `S`, lowest live degree. Ties go to the smaller id.
pub fn select_branch_vertex(inst: &Instance<'_>) -> Option<usize> {
    let cands = inst.candidates();
    let primary = cands
        .iter()
        .copied()
        .filter(|&v| inst.nn_in_s(v) > 0)
        .max_by_key(|&v| (inst.nn_in_s(v), std::cmp::Reverse(v)));
    primary.or_else(|| cands.iter().copied().min_by_key(|&v| (inst.live_degree(v), v)))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Theoretical,
    Full,
}

enum Task {
    Visit { depth: usize, left: bool, chain: usize },
    Right { cp: Checkpoint, b: usize, depth: usize },
}

struct Engine<'a, 'g> {
    inst: &'a mut Instance<'g>,
    config: &'a SolverConfig,
    mode: Mode,
    lb: usize,
    found: Option<Vec<usize>>,
    stats: SearchStats,
    deadline: Option<Instant>,
    timed_out: bool,
}

impl Engine<'_, '_> {
    fn improve(&mut self, set: Vec<usize>) {
        debug_assert!(is_k_defective(self.inst.graph(), &set, self.inst.k()));
        self.lb = set.len();
        self.stats.lb_history.push(self.lb);
        self.found = Some(set);
    }

    fn out_of_time(&mut self) -> bool {
        if let Some(deadline) = self.deadline {
            let every = self.config.node_check_interval.max(1);
            if self.stats.nodes % every == 0 && Instant::now() >= deadline {
                self.timed_out = true;
            }
        }
        self.timed_out
    }

    fn run(&mut self) {
        let k = self.inst.k();
        let mut stack = vec![Task::Visit { depth: 0, left: false, chain: 0 }];
        while let Some(task) = stack.pop() {
            let (depth, left, parent_chain) = match task {
                Task::Visit { depth, left, chain } => (depth, left, chain),
                Task::Right { cp, b, depth } => {
                    self.inst.rollback(cp);
                    self.inst.remove(b);
                    stack.push(Task::Visit { depth: depth + 1, left: false, chain: 0 });
                    continue;
                }
            };
            self.stats.nodes += 1;
            self.stats.max_depth = self.stats.max_depth.max(depth);
            if self.out_of_time() {
                break;
            }
            debug_assert!(self.inst.nonedges_in_s() <= k);
            let lb = self.lb;
            let log = match self.mode {
                Mode::Full => apply_all(self.inst, lb, self.config),
                Mode::Theoretical => rr1_rr2_fixpoint(self.inst),
            };
            self.stats.rule_fires.record(&log);
            let chain = if left && log.is_empty() { parent_chain + 1 } else { 0 };
            self.stats.max_idle_left_chain = self.stats.max_idle_left_chain.max(chain);
            debug_assert!(chain <= k + 1, "idle left chain of length {chain} with k = {k}");
            if log.is_pruned() {
                continue;
            }
            if self.mode == Mode::Full && self.inst.s().len() > self.lb {
                let s = self.inst.s().to_vec();
                self.improve(s);
            }
            if self.inst.live_non_edges() <= k {
                self.stats.leaves += 1;
                if self.inst.num_vertices() > self.lb {
                    let all = self.inst.live_vertices();
                    self.improve(all);
                }
                continue;
            }
            if self.mode == Mode::Full {
                let ub = combined_upper_bound(self.inst, self.config, self.lb);
                if ub <= self.lb {
                    self.stats.bound_prunes += 1;
                    continue;
                }
            }
            let b = select_branch_vertex(self.inst).expect("a non-leaf instance has candidates");
            let cp = self.inst.checkpoint();
            stack.push(Task::Right { cp, b, depth });
            self.inst.add_to_s(b);
            stack.push(Task::Visit { depth: depth + 1, left: true, chain });
        }
    }
}

/// Outcome of one search from a given instance.
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    /// A solution larger than the starting lower bound, ascending.
    pub improved: Option<Vec<usize>>,
    pub stats: SearchStats,
    pub timed_out: bool,
}

fn search(
    inst: &mut Instance<'_>,
    lb: usize,
    config: &SolverConfig,
    mode: Mode,
    deadline: Option<Instant>,
) -> SearchOutcome {
    let root = inst.checkpoint();
    let mut engine = Engine {
        inst,
        config,
        mode,
        lb,
        found: None,
        stats: SearchStats::default(),
        deadline,
        timed_out: false,
    };
    engine.stats.lb_history.push(lb);
    engine.run();
    let Engine { stats, timed_out, inst, found, .. } = engine;
    inst.rollback(root);
    let improved = found.map(|mut set| {
        set.sort_unstable();
        set
    });
    SearchOutcome { improved, stats, timed_out }
}

/// The minimal search: RR1/RR2, leaf test and branching, nothing else.
/// `best` is replaced whenever a larger solution is found.
pub fn branch_and_bound_t(inst: &mut Instance<'_>, best: &mut Vec<usize>) -> SearchStats {
    let config = SolverConfig::new(inst.k());
    let out = search(inst, best.len(), &config, Mode::Theoretical, None);
    if let Some(set) = out.improved {
        *best = set;
    }
    out.stats
}

/// Full-rule search from `inst`, looking for solutions larger than `lb`.
pub fn branch_and_bound(
    inst: &mut Instance<'_>,
    lb: usize,
    config: &SolverConfig,
    deadline: Option<Instant>,
) -> SearchOutcome {
    search(inst, lb, config, Mode::Full, deadline)
}

/// Maximum k-defective clique by the minimal search.
pub fn kdc_t(g: &Graph, config: &SolverConfig) -> SolverResult {
    let start = Instant::now();
    let deadline = config.time_limit.map(|t| start + t);
    let mut inst = Instance::new(g, config.k);
    let out = search(&mut inst, 0, config, Mode::Theoretical, deadline);
    let best = out.improved.unwrap_or_default();
    let mut stats = out.stats;
    stats.elapsed = start.elapsed();
    SolverResult {
        size: best.len(),
        best,
        optimal: !out.timed_out,
        stats,
    }
}

/// Maximum k-defective clique of `g` with budget `config.k`.
pub fn kdc(g: &Graph, config: &SolverConfig) -> SolverResult {
    let start = Instant::now();
    let deadline = config.time_limit.map(|t| start + t);
    let (reduced, report) = preprocess(g, config);
    let mut best = report.initial_clique.clone();
    let mut stats = SearchStats::default();
    let mut timed_out = false;
    if reduced.graph.n() > 0 {
        let mut inst = Instance::new(&reduced.graph, config.k);
        let out = branch_and_bound(&mut inst, best.len(), config, deadline);
        if let Some(local) = out.improved {
            best = reduced.lift(&local);
        }
        stats = out.stats;
        timed_out = out.timed_out;
    } else {
        stats.lb_history.push(best.len());
    }
    debug_assert!(is_k_defective(g, &best, config.k));
    stats.preprocess = Some(report);
    stats.elapsed = start.elapsed();
    SolverResult {
        size: best.len(),
        best,
        optimal: !timed_out,
        stats,
    }
}

/// Up to `r` vertex-disjoint k-defective cliques, each a maximum one of the
/// graph left after deleting the previous ones. Stops early once the graph
/// is empty or the time limit cut a run short.
pub fn top_r_diversified(g: &Graph, r: usize, config: &SolverConfig) -> Vec<SolverResult> {
    let mut out = Vec::new();
    let mut rest = ReducedGraph::identity(g);
    while out.len() < r && rest.graph.n() > 0 {
        let mut res = kdc(&rest.graph, config);
        let taken = res.best.clone();
        res.best = rest.lift(&taken);
        let optimal = res.optimal;
        out.push(res);
        let mut keep = vec![true; rest.graph.n()];
        for &v in &taken {
            keep[v] = false;
        }
        rest = rest.restrict(&keep);
        if !optimal {
            break;
        }
    }
    out
}
