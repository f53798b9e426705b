//! Reduction rules applied at every search node.
//!
//! | rule | effect |
//! |------|--------|
//! | RR1  | drop a candidate whose addition would exceed the budget |
//! | RR2  | absorb a candidate with at most one non-neighbor in `g` |
//! | RR3  | drop candidates that cannot reach `lb + 1` by the sorted non-neighbor counts |
//! | RR4  | drop candidates failing the pair bound against the newest `S` vertex |
//! | RR5  | peel `g` to its `(lb - k)`-core |
//!
//! Every rule returns a [`ReductionLog`]; the instance's own trail makes the
//! changes undoable.

use serde::{Deserialize, Serialize};

use crate::config::SolverConfig;
use crate::instance::Instance;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rule {
    Rr1,
    Rr2,
    Rr3,
    Rr4,
    Rr5,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Action {
    Removed(usize),
    AddedToS(usize),
    /// The instance holds no solution larger than `lb`.
    Pruned,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LoggedAction {
    pub action: Action,
    pub rule: Rule,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReductionLog {
    pub actions: Vec<LoggedAction>,
}

impl ReductionLog {
    fn push(&mut self, rule: Rule, action: Action) {
        self.actions.push(LoggedAction { action, rule });
    }

    fn extend(&mut self, other: ReductionLog) {
        self.actions.extend(other.actions);
    }

    pub fn is_empty(&self) -> bool {
        self.actions.is_empty()
    }

    pub fn is_pruned(&self) -> bool {
        self.actions.last().is_some_and(|a| a.action == Action::Pruned)
    }

    /// Number of vertex moves attributed to `rule`.
    pub fn count(&self, rule: Rule) -> usize {
        self.actions
            .iter()
            .filter(|a| a.rule == rule && a.action != Action::Pruned)
            .count()
    }

    /// Re-applies the logged moves to an instance in the pre-state.
    pub fn replay(&self, inst: &mut Instance<'_>) {
        for a in &self.actions {
            match a.action {
                Action::Removed(v) => inst.remove(v),
                Action::AddedToS(v) => inst.add_to_s(v),
                Action::Pruned => {}
            }
        }
    }
}

/// Common-neighbor statistics of `u ∈ S` and candidate `v` over the
/// candidates other than `v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairCounters {
    pub cn: usize,
    pub cnon: usize,
    pub xn: usize,
}

/// Direct computation of [`PairCounters`].
pub fn pair_counters(inst: &Instance<'_>, u: usize, v: usize) -> PairCounters {
    let g = inst.graph();
    let mut c = PairCounters { cn: 0, cnon: 0, xn: 0 };
    for &w in inst.candidates() {
        if w == v {
            continue;
        }
        match (g.has_edge(u, w), g.has_edge(v, w)) {
            (true, true) => c.cn += 1,
            (false, false) => c.cnon += 1,
            _ => c.xn += 1,
        }
    }
    c
}

/// Largest solution size the pair bound allows for `S ∪ {v}`.
fn pair_bound(s_len: usize, rem: usize, c: PairCounters) -> usize {
    let extra = (rem.saturating_sub(c.xn)) / 2;
    s_len + 1 + c.cn + rem.min(c.xn) + c.cnon.min(extra)
}

fn exceeds_budget(inst: &Instance<'_>, v: usize) -> bool {
    inst.nonedges_in_s() + inst.nn_in_s(v) > inst.k()
}

/// One RR1 pass.
pub fn rr1(inst: &mut Instance<'_>) -> ReductionLog {
    let mut log = ReductionLog::default();
    let doomed: Vec<usize> = inst
        .candidates()
        .iter()
        .copied()
        .filter(|&v| exceeds_budget(inst, v))
        .collect();
    for v in doomed {
        inst.remove(v);
        log.push(Rule::Rr1, Action::Removed(v));
    }
    log
}

/// The RR2 choice: among candidates that fit the budget and miss at most
/// one vertex of `g`, the one with most non-neighbors in `S`, then lowest id.
fn rr2_choice(inst: &Instance<'_>) -> Option<usize> {
    let threshold = inst.num_vertices().saturating_sub(2);
    inst.candidates()
        .iter()
        .copied()
        .filter(|&v| !exceeds_budget(inst, v) && inst.live_degree(v) >= threshold)
        .max_by_key(|&v| (inst.nn_in_s(v), std::cmp::Reverse(v)))
}

/// One RR2 absorption, if any vertex qualifies.
pub fn rr2_once(inst: &mut Instance<'_>) -> ReductionLog {
    let mut log = ReductionLog::default();
    if let Some(v) = rr2_choice(inst) {
        inst.add_to_s(v);
        log.push(Rule::Rr2, Action::AddedToS(v));
    }
    log
}

/// Applies RR1 and RR2 until neither fires.
///
/// On return every candidate fits the budget and has at least two
/// non-neighbors in `g`.
pub fn rr1_rr2_fixpoint(inst: &mut Instance<'_>) -> ReductionLog {
    let mut log = ReductionLog::default();
    loop {
        log.extend(rr1(inst));
        match rr2_choice(inst) {
            Some(v) => {
                inst.add_to_s(v);
                log.push(Rule::Rr2, Action::AddedToS(v));
            }
            None => break,
        }
    }
    debug_assert!(satisfies_fixpoint_property(inst), "RR1/RR2 fixpoint property violated");
    log
}

/// Every candidate `v` has `|Ē(S ∪ v)| <= k` and `d_g(v) < |V(g)| - 2`.
pub fn satisfies_fixpoint_property(inst: &Instance<'_>) -> bool {
    let n = inst.num_vertices();
    inst.candidates()
        .iter()
        .all(|&v| !exceeds_budget(inst, v) && inst.live_degree(v) + 2 < n)
}

/// RR3: with candidates sorted by `nn_in_s`, the first `lb - |S|` of them
/// already consume part of the budget; any later candidate whose own count
/// exceeds what is left cannot be in a solution larger than `lb`.
pub fn rr3(inst: &mut Instance<'_>, lb: usize) -> ReductionLog {
    let mut log = ReductionLog::default();
    let s_len = inst.s().len();
    if lb < s_len {
        return log;
    }
    let prefix_len = lb - s_len;
    let cands = inst.candidates();
    if prefix_len >= cands.len() {
        return log;
    }
    let k = inst.k();
    let cap = k + 1;
    let mut buckets = vec![0usize; cap + 2];
    for &v in cands {
        buckets[inst.nn_in_s(v).min(cap) + 1] += 1;
    }
    for i in 1..buckets.len() {
        buckets[i] += buckets[i - 1];
    }
    let mut sorted = vec![0; cands.len()];
    for &v in cands {
        let key = inst.nn_in_s(v).min(cap);
        sorted[buckets[key]] = v;
        buckets[key] += 1;
    }
    let prefix: usize = sorted[..prefix_len].iter().map(|&v| inst.nn_in_s(v)).sum();
    let left = k as i64 - inst.nonedges_in_s() as i64 - prefix as i64;
    for &v in &sorted[prefix_len..] {
        if inst.nn_in_s(v) as i64 > left {
            inst.remove(v);
            log.push(Rule::Rr3, Action::Removed(v));
        }
    }
    log
}

/// RR4 against the most recently added member of `S`.
pub fn rr4(inst: &mut Instance<'_>, lb: usize) -> ReductionLog {
    match inst.s().last() {
        Some(&u) => rr4_against(inst, lb, u),
        None => ReductionLog::default(),
    }
}

/// RR4 for a fixed `u ∈ S`, each candidate evaluated once on the current
/// state.
pub fn rr4_against(inst: &mut Instance<'_>, lb: usize, u: usize) -> ReductionLog {
    let mut log = ReductionLog::default();
    let g = inst.graph();
    let k = inst.k();
    let cands = inst.candidates();
    let total = cands.len();
    let mut adj_u = vec![false; g.n()];
    for &w in g.neighbors(u) {
        adj_u[w] = true;
    }
    let near = cands.iter().filter(|&&w| adj_u[w]).count();
    let far = total - near;
    let mut doomed = Vec::new();
    for &v in cands {
        let used = inst.nonedges_in_s() + inst.nn_in_s(v);
        if used > k {
            continue;
        }
        let mut cn = 0;
        let mut far_neighbors = 0;
        for &w in g.neighbors(v) {
            if inst.is_candidate(w) {
                if adj_u[w] {
                    cn += 1;
                } else {
                    far_neighbors += 1;
                }
            }
        }
        let far_excl = far - usize::from(!adj_u[v]);
        let cnon = far_excl - far_neighbors;
        let xn = total - 1 - cn - cnon;
        let c = PairCounters { cn, cnon, xn };
        if pair_bound(inst.s().len(), k - used, c) <= lb {
            doomed.push(v);
        }
    }
    for v in doomed {
        inst.remove(v);
        log.push(Rule::Rr4, Action::Removed(v));
    }
    log
}

/// RR5: peel `g` to its `(lb - k)`-core. Losing a member of `S` prunes the
/// whole instance.
pub fn rr5(inst: &mut Instance<'_>, lb: usize) -> ReductionLog {
    let mut log = ReductionLog::default();
    let k = inst.k();
    if lb <= k {
        return log;
    }
    let threshold = lb - k;
    if inst.s().iter().any(|&u| inst.live_degree(u) < threshold) {
        log.push(Rule::Rr5, Action::Pruned);
        return log;
    }
    let g = inst.graph();
    let mut queue: Vec<usize> = inst
        .candidates()
        .iter()
        .copied()
        .filter(|&v| inst.live_degree(v) < threshold)
        .collect();
    while let Some(v) = queue.pop() {
        inst.remove(v);
        log.push(Rule::Rr5, Action::Removed(v));
        for &w in g.neighbors(v) {
            if inst.live_degree(w) + 1 == threshold {
                match inst.status(w) {
                    crate::instance::Status::InS => {
                        log.push(Rule::Rr5, Action::Pruned);
                        return log;
                    }
                    crate::instance::Status::Candidate => queue.push(w),
                    crate::instance::Status::Removed => {}
                }
            }
        }
    }
    log
}

/// One round of every enabled rule: RR1/RR2 fixpoint, RR4, RR3, RR5, then
/// the RR1/RR2 fixpoint again. Stops early once the instance is pruned.
pub fn apply_all(inst: &mut Instance<'_>, lb: usize, config: &SolverConfig) -> ReductionLog {
    let mut log = rr1_rr2_fixpoint(inst);
    if config.enable_rr4 {
        log.extend(rr4(inst, lb));
    }
    if config.enable_rr3 {
        log.extend(rr3(inst, lb));
    }
    log.extend(rr5(inst, lb));
    if log.is_pruned() {
        return log;
    }
    log.extend(rr1_rr2_fixpoint(inst));
    log
}
