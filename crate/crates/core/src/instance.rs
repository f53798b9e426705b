//! Mutable search state: a partial solution `S`, the live candidate set and
//! the counters every reduction rule and bound reads.
//!
//! The base graph never changes. Vertices move between three states and
//! every move is recorded on a trail so a subtree can be undone by
//! [`Instance::rollback`] in time proportional to the work it did.

use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    InS,
    Candidate,
    Removed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Change {
    Added { v: usize, slot: usize },
    Removed { v: usize, slot: usize },
}

/// Position on the undo trail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Checkpoint(usize);

#[derive(Clone, Debug)]
pub struct Instance<'g> {
    graph: &'g Graph,
    k: usize,
    status: Vec<Status>,
    s: Vec<usize>,
    // sparse set; the first `cand_len` entries are the live candidates
    cand: Vec<usize>,
    cand_pos: Vec<usize>,
    cand_len: usize,
    adj_in_s: Vec<usize>,
    live_deg: Vec<usize>,
    live_edges: usize,
    nonedges_in_s: usize,
    trail: Vec<Change>,
}

impl<'g> Instance<'g> {
    /// Root instance: every vertex is a candidate and `S` is empty.
    pub fn new(graph: &'g Graph, k: usize) -> Self {
        let n = graph.n();
        Self {
            graph,
            k,
            status: vec![Status::Candidate; n],
            s: Vec::new(),
            cand: (0..n).collect(),
            cand_pos: (0..n).collect(),
            cand_len: n,
            adj_in_s: vec![0; n],
            live_deg: (0..n).map(|u| graph.degree(u)).collect(),
            live_edges: graph.m(),
            nonedges_in_s: 0,
            trail: Vec::new(),
        }
    }

    #[inline]
    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    /// Partial solution in insertion order.
    #[inline]
    pub fn s(&self) -> &[usize] {
        &self.s
    }

    /// Live candidates `V(g) \ S`, in no particular order.
    #[inline]
    pub fn candidates(&self) -> &[usize] {
        &self.cand[..self.cand_len]
    }

    /// Index of candidate `v` inside [`Instance::candidates`].
    #[inline]
    pub fn candidate_slot(&self, v: usize) -> usize {
        debug_assert!(self.is_candidate(v));
        self.cand_pos[v]
    }

    #[inline]
    pub fn status(&self, v: usize) -> Status {
        self.status[v]
    }

    #[inline]
    pub fn is_candidate(&self, v: usize) -> bool {
        self.status[v] == Status::Candidate
    }

    /// `|V(g)|`: members of `S` plus live candidates.
    #[inline]
    pub fn num_vertices(&self) -> usize {
        self.s.len() + self.cand_len
    }

    /// `|Ē(S)|`.
    #[inline]
    pub fn nonedges_in_s(&self) -> usize {
        self.nonedges_in_s
    }

    /// Number of non-neighbors of `v` inside `S` (never counting `v`).
    #[inline]
    pub fn nn_in_s(&self, v: usize) -> usize {
        let own = usize::from(self.status[v] == Status::InS);
        self.s.len() - own - self.adj_in_s[v]
    }

    /// Degree of `v` in the live graph `g`.
    #[inline]
    pub fn live_degree(&self, v: usize) -> usize {
        self.live_deg[v]
    }

    #[inline]
    pub fn live_edges(&self) -> usize {
        self.live_edges
    }

    /// Non-edges of the whole live graph; `g` is a k-defective clique iff
    /// this is at most `k`.
    #[inline]
    pub fn live_non_edges(&self) -> usize {
        let n = self.num_vertices();
        n * n.saturating_sub(1) / 2 - self.live_edges
    }

    #[inline]
    pub fn checkpoint(&self) -> Checkpoint {
        Checkpoint(self.trail.len())
    }

    fn take_candidate(&mut self, v: usize) -> usize {
        let slot = self.cand_pos[v];
        let last = self.cand_len - 1;
        let x = self.cand[last];
        self.cand.swap(slot, last);
        self.cand_pos[x] = slot;
        self.cand_pos[v] = last;
        self.cand_len = last;
        slot
    }

    fn restore_candidate(&mut self, v: usize, slot: usize) {
        let last = self.cand_len;
        debug_assert_eq!(self.cand[last], v);
        let x = self.cand[slot];
        self.cand.swap(slot, last);
        self.cand_pos[x] = last;
        self.cand_pos[v] = slot;
        self.cand_len = last + 1;
    }

    /// Moves candidate `v` into `S`.
    pub fn add_to_s(&mut self, v: usize) {
        assert_eq!(self.status[v], Status::Candidate, "vertex {v} is not a candidate");
        self.nonedges_in_s += self.nn_in_s(v);
        debug_assert!(self.nonedges_in_s <= self.k, "S exceeds the non-edge budget");
        let slot = self.take_candidate(v);
        self.status[v] = Status::InS;
        self.s.push(v);
        for &w in self.graph.neighbors(v) {
            if self.status[w] != Status::Removed {
                self.adj_in_s[w] += 1;
            }
        }
        self.trail.push(Change::Added { v, slot });
    }

    /// Deletes candidate `v` from the live graph.
    pub fn remove(&mut self, v: usize) {
        assert_eq!(self.status[v], Status::Candidate, "vertex {v} is not a candidate");
        let slot = self.take_candidate(v);
        self.status[v] = Status::Removed;
        for &w in self.graph.neighbors(v) {
            if self.status[w] != Status::Removed {
                self.live_deg[w] -= 1;
                self.live_edges -= 1;
            }
        }
        self.trail.push(Change::Removed { v, slot });
    }

    /// Undoes every change made after `cp`, newest first.
    pub fn rollback(&mut self, cp: Checkpoint) {
        while self.trail.len() > cp.0 {
            match self.trail.pop().unwrap() {
                Change::Added { v, slot } => {
                    self.s.pop();
                    self.status[v] = Status::Candidate;
                    for &w in self.graph.neighbors(v) {
                        if self.status[w] != Status::Removed {
                            self.adj_in_s[w] -= 1;
                        }
                    }
                    self.nonedges_in_s -= self.nn_in_s(v);
                    self.restore_candidate(v, slot);
                }
                Change::Removed { v, slot } => {
                    self.status[v] = Status::Candidate;
                    for &w in self.graph.neighbors(v) {
                        if self.status[w] != Status::Removed {
                            self.live_deg[w] += 1;
                            self.live_edges += 1;
                        }
                    }
                    self.restore_candidate(v, slot);
                }
            }
        }
    }

    /// Recomputes every counter from the status flags and compares.
    pub fn is_consistent(&self) -> bool {
        let g = self.graph;
        let n = g.n();
        let live = |w: usize| self.status[w] != Status::Removed;
        let mut ok = self.s.len() + self.cand_len + (0..n).filter(|&w| !live(w)).count() == n;
        ok &= self.s.iter().all(|&v| self.status[v] == Status::InS);
        ok &= self.candidates().iter().enumerate().all(|(i, &v)| {
            self.status[v] == Status::Candidate && self.cand_pos[v] == i
        });
        let mut edges = 0;
        for v in (0..n).filter(|&v| live(v)) {
            let deg = g.neighbors(v).iter().filter(|&&w| live(w)).count();
            let in_s = g.neighbors(v).iter().filter(|&&w| self.status[w] == Status::InS).count();
            ok &= deg == self.live_deg[v] && in_s == self.adj_in_s[v];
            edges += deg;
        }
        ok &= edges / 2 == self.live_edges;
        ok &= g.count_non_edges(&self.s) == self.nonedges_in_s;
        ok && self.nonedges_in_s <= self.k
    }

    /// Compares the observable state of two instances, ignoring the trail.
    pub fn same_state(&self, other: &Instance<'_>) -> bool {
        self.status == other.status
            && self.s == other.s
            && self.cand == other.cand
            && self.cand_pos == other.cand_pos
            && self.cand_len == other.cand_len
            && self.adj_in_s == other.adj_in_s
            && self.live_deg == other.live_deg
            && self.live_edges == other.live_edges
            && self.nonedges_in_s == other.nonedges_in_s
    }

    /// Live vertices `S ∪ candidates`, ascending.
    pub fn live_vertices(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.s.iter().chain(self.candidates()).copied().collect();
        all.sort_unstable();
        all
    }
}
