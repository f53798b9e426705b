//! Upper bounds on the largest k-defective clique inside an instance.
//!
//! All bounds read the counters kept by [`Instance`]; after the candidate
//! coloring each runs in time linear in the live graph.

use crate::config::SolverConfig;
use crate::decompose::{bucket_peel, DegeneracyInfo};
use crate::graph::Graph;
use crate::instance::Instance;

/// Partition of a vertex set into independent sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringPartition {
    pub classes: Vec<Vec<usize>>,
}

impl ColoringPartition {
    /// Number of colors.
    pub fn c(&self) -> usize {
        self.classes.len()
    }

    pub fn color_of(&self, v: usize) -> Option<usize> {
        self.classes.iter().position(|class| class.contains(&v))
    }

    /// `true` if no class contains an edge of `g`.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.classes.iter().all(|class| {
            class
                .iter()
                .enumerate()
                .all(|(i, &a)| class[i + 1..].iter().all(|&b| !g.has_edge(a, b)))
        })
    }
}

/// A candidate with its weight in the improved coloring bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeightedCandidate {
    pub vertex: usize,
    pub nn_in_s: usize,
    pub weight: usize,
}

/// Smallest-free-color greedy over `info.order` reversed.
pub fn greedy_coloring(g: &Graph, info: &DegeneracyInfo) -> ColoringPartition {
    let mut color = vec![usize::MAX; g.n()];
    let mut stamp = vec![usize::MAX; g.n() + 1];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (step, &v) in info.order.iter().rev().enumerate() {
        for &w in g.neighbors(v) {
            if color[w] != usize::MAX {
                stamp[color[w]] = step;
            }
        }
        let c = (0..).find(|&c| stamp[c] != step).unwrap();
        if c == classes.len() {
            classes.push(Vec::new());
        }
        classes[c].push(v);
        color[v] = c;
    }
    ColoringPartition { classes }
}

/// Greedy coloring of the live candidates of `inst`, in reverse peeling
/// order of the candidate subgraph.
pub fn color_candidates(inst: &Instance<'_>) -> ColoringPartition {
    let g = inst.graph();
    let cands = inst.candidates();
    let c = cands.len();
    // local CSR of the candidate subgraph; local id = slot in `cands`
    let mut offsets = Vec::with_capacity(c + 1);
    let mut targets = Vec::new();
    offsets.push(0);
    for &v in cands {
        for &w in g.neighbors(v) {
            if inst.is_candidate(w) {
                targets.push(inst.candidate_slot(w));
            }
        }
        offsets.push(targets.len());
    }
    let degrees: Vec<usize> = (0..c).map(|i| offsets[i + 1] - offsets[i]).collect();
    let order = bucket_peel(c, &degrees, |i| targets[offsets[i]..offsets[i + 1]].iter().copied());
    let mut color = vec![usize::MAX; c];
    let mut stamp = vec![usize::MAX; c + 1];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (step, &i) in order.iter().rev().enumerate() {
        for &j in &targets[offsets[i]..offsets[i + 1]] {
            if color[j] != usize::MAX {
                stamp[color[j]] = step;
            }
        }
        let col = (0..).find(|&col| stamp[col] != step).unwrap();
        if col == classes.len() {
            classes.push(Vec::new());
        }
        classes[col].push(cands[i]);
        color[i] = col;
    }
    ColoringPartition { classes }
}

/// Largest `s` with `s(s-1)/2 <= k`: how many pairwise non-adjacent
/// vertices one k-defective clique can hold.
pub fn independent_cap(k: usize) -> usize {
    let mut s = 1;
    while (s + 1) * s / 2 <= k {
        s += 1;
    }
    s
}

/// Classic coloring bound: every color class contributes at most
/// [`independent_cap`] vertices. Kept for comparison, not used to prune.
pub fn ub_coloring_basic(s_size: usize, k: usize, partition: &ColoringPartition) -> usize {
    let cap = independent_cap(k);
    s_size + partition.classes.iter().map(|c| c.len().min(cap)).sum::<usize>()
}

/// Longest prefix of ascending `weights` (given as a histogram, index =
/// weight) whose sum stays within `budget`.
fn prefix_within(hist: &[usize], budget: usize) -> usize {
    let mut rem = budget;
    let mut taken = 0;
    for (w, &count) in hist.iter().enumerate() {
        if count == 0 {
            continue;
        }
        if w == 0 {
            taken += count;
            continue;
        }
        let t = count.min(rem / w);
        taken += t;
        rem -= t * w;
        if t < count {
            break;
        }
    }
    taken
}

/// Candidates bucketed by `nn_in_s`, ascending, keys clamped at `k + 1`.
fn candidates_by_nn(inst: &Instance<'_>) -> Vec<usize> {
    let cap = inst.k() + 1;
    let mut buckets = vec![0usize; cap + 2];
    for &v in inst.candidates() {
        buckets[inst.nn_in_s(v).min(cap) + 1] += 1;
    }
    for i in 1..buckets.len() {
        buckets[i] += buckets[i - 1];
    }
    let mut out = vec![0; inst.candidates().len()];
    for &v in inst.candidates() {
        let key = inst.nn_in_s(v).min(cap);
        out[buckets[key]] = v;
        buckets[key] += 1;
    }
    out
}

/// Class index of every live candidate, indexed by candidate slot.
fn class_by_slot(inst: &Instance<'_>, partition: &ColoringPartition) -> Vec<usize> {
    let mut class_of = vec![usize::MAX; inst.candidates().len()];
    for (ci, class) in partition.classes.iter().enumerate() {
        for &v in class {
            class_of[inst.candidate_slot(v)] = ci;
        }
    }
    class_of
}

/// Candidate weights of the improved coloring bound: inside each class,
/// the j-th vertex by ascending `nn_in_s` weighs `nn_in_s + j - 1`.
pub fn ub1_weights(inst: &Instance<'_>, partition: &ColoringPartition) -> Vec<WeightedCandidate> {
    let sorted = candidates_by_nn(inst);
    let class_of = class_by_slot(inst, partition);
    let mut seen = vec![0usize; partition.classes.len()];
    sorted
        .into_iter()
        .map(|v| {
            let ci = class_of[inst.candidate_slot(v)];
            let nn = inst.nn_in_s(v);
            let w = nn + seen[ci];
            seen[ci] += 1;
            WeightedCandidate {
                vertex: v,
                nn_in_s: nn,
                weight: w,
            }
        })
        .collect()
}

/// Improved coloring bound: `|S|` plus the longest weight-ascending prefix
/// of candidates that fits into the remaining budget `k - |Ē(S)|`.
pub fn ub1(inst: &Instance<'_>, partition: &ColoringPartition) -> usize {
    let k = inst.k();
    let budget = k.saturating_sub(inst.nonedges_in_s());
    let cap = k + 1;
    let class_of = class_by_slot(inst, partition);
    let mut class_rank = vec![0usize; partition.classes.len()];
    let mut hist = vec![0usize; cap + 1];
    for v in candidates_by_nn(inst) {
        let ci = class_of[inst.candidate_slot(v)];
        let w = (inst.nn_in_s(v) + class_rank[ci]).min(cap);
        class_rank[ci] += 1;
        hist[w] += 1;
    }
    inst.s().len() + prefix_within(&hist[..=budget.min(cap)], budget)
}

/// Degree bound `min_{u ∈ S} d_g(u) + 1 + k`; `None` when `S` is empty.
pub fn ub2(inst: &Instance<'_>) -> Option<usize> {
    inst.s()
        .iter()
        .map(|&u| inst.live_degree(u))
        .min()
        .map(|d| d + 1 + inst.k())
}

/// `|S|` plus the longest `nn_in_s`-ascending prefix of candidates whose
/// non-neighbor counts fit into `k - |Ē(S)|`.
pub fn ub3(inst: &Instance<'_>) -> usize {
    let k = inst.k();
    let budget = k.saturating_sub(inst.nonedges_in_s());
    let cap = k + 1;
    let mut hist = vec![0usize; cap + 1];
    for &v in inst.candidates() {
        hist[inst.nn_in_s(v).min(cap)] += 1;
    }
    inst.s().len() + prefix_within(&hist[..=budget.min(cap)], budget)
}

/// Minimum of the enabled bounds, cheapest first. The coloring bound is
/// only computed while the cheaper ones still exceed `lb`. Returns
/// `usize::MAX` if every bound is disabled.
pub fn combined_upper_bound(inst: &Instance<'_>, config: &SolverConfig, lb: usize) -> usize {
    let mut best = usize::MAX;
    if config.enable_ub2 {
        if let Some(b) = ub2(inst) {
            best = best.min(b);
        }
    }
    if config.enable_ub3 {
        best = best.min(ub3(inst));
    }
    if config.enable_ub1 && best > lb {
        let partition = color_candidates(inst);
        best = best.min(ub1(inst, &partition));
    }
    best
}
