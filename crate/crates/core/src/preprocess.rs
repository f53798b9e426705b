//! Initial solution and global graph reduction, run once before the search.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::config::SolverConfig;
use crate::decompose::{core_mask, degeneracy_ordering, k_truss, DegeneracyInfo};
use crate::graph::Graph;
use crate::verify::is_k_defective;

/// Longest suffix of a degeneracy ordering of `g` that is a k-defective
/// clique, ascending.
pub fn degen(g: &Graph, k: usize) -> Vec<usize> {
    degen_in_order(g, &degeneracy_ordering(g), k)
}

/// [`degen`] with a caller-supplied ordering.
pub fn degen_in_order(g: &Graph, info: &DegeneracyInfo, k: usize) -> Vec<usize> {
    let n = g.n();
    let mut edges = g.m();
    let mut start = n;
    for i in 0..=n {
        let r = n - i;
        if r * r.saturating_sub(1) / 2 - edges <= k {
            start = i;
            break;
        }
        edges -= info.later_neighbors(g, info.order[i]).count();
    }
    let mut out = info.order[start..].to_vec();
    out.sort_unstable();
    out
}

/// Best of [`degen`] on `g` and, for every vertex `u`, `u` plus [`degen`] on
/// the subgraph induced by the neighbors of `u` ranked after it.
pub fn degen_opt(g: &Graph, k: usize) -> Vec<usize> {
    let info = degeneracy_ordering(g);
    let mut best = degen_in_order(g, &info, k);
    for &u in &info.order {
        let later: Vec<usize> = info.later_neighbors(g, u).collect();
        if later.len() < best.len() {
            continue;
        }
        let sub = g.induced_subgraph(&later);
        let local = degen(&sub, k);
        if local.len() + 1 > best.len() {
            let mut cand: Vec<usize> = local.iter().map(|&i| later[i]).collect();
            cand.push(u);
            cand.sort_unstable();
            assert!(is_k_defective(g, &cand, k), "neighborhood solution is not {k}-defective");
            best = cand;
        }
    }
    best
}

/// A subgraph together with the id each of its vertices has in the graph it
/// was cut from.
#[derive(Clone, Debug)]
pub struct ReducedGraph {
    pub graph: Graph,
    pub origin: Vec<usize>,
}

impl ReducedGraph {
    pub fn identity(g: &Graph) -> Self {
        Self {
            graph: g.clone(),
            origin: (0..g.n()).collect(),
        }
    }

    /// Maps local ids back to the source graph, ascending.
    pub fn lift(&self, local: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = local.iter().map(|&i| self.origin[i]).collect();
        out.sort_unstable();
        out
    }

    pub(crate) fn restrict(&self, keep: &[bool]) -> Self {
        let local: Vec<usize> = (0..self.graph.n()).filter(|&i| keep[i]).collect();
        Self {
            graph: self.graph.induced_subgraph(&local),
            origin: local.iter().map(|&i| self.origin[i]).collect(),
        }
    }
}

/// Core peeling to `lb - k`, then truss peeling to `lb - k + 1`, then one
/// more core pass. Every k-defective clique larger than `lb` survives with
/// all of its edges.
pub fn global_reduce(g: &Graph, lb: usize, k: usize) -> ReducedGraph {
    global_reduce_with(g, lb, k, true)
}

/// [`global_reduce`] with the truss step optional.
pub fn global_reduce_with(g: &Graph, lb: usize, k: usize, truss: bool) -> ReducedGraph {
    let mut out = ReducedGraph::identity(g);
    if lb <= k {
        return out;
    }
    let core = lb - k;
    out = out.restrict(&core_mask(&out.graph, core, None));
    let t = lb - k + 1;
    if truss && t > 2 {
        let edges = k_truss(&out.graph, t);
        out.graph = out.graph.edge_subgraph(&edges);
        out = out.restrict(&core_mask(&out.graph, core, None));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreprocessReport {
    /// Heuristic solution in ids of the input graph, ascending.
    pub initial_clique: Vec<usize>,
    pub initial_size: usize,
    pub reduced_n: usize,
    pub reduced_m: usize,
    pub elapsed: Duration,
}

/// Heuristic solution followed by global reduction against its size.
pub fn preprocess(g: &Graph, config: &SolverConfig) -> (ReducedGraph, PreprocessReport) {
    let start = Instant::now();
    let initial = if config.use_degen_opt {
        degen_opt(g, config.k)
    } else {
        degen(g, config.k)
    };
    let reduced = global_reduce_with(g, initial.len(), config.k, config.enable_rr6);
    let report = PreprocessReport {
        initial_size: initial.len(),
        initial_clique: initial,
        reduced_n: reduced.graph.n(),
        reduced_m: reduced.graph.m(),
        elapsed: start.elapsed(),
    };
    (reduced, report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{self, v};
    use crate::generate::gnp;
    use crate::verify::{brute_force_max, OracleBudget};

    fn vs(ids: &[usize]) -> Vec<usize> {
        ids.iter().map(|&i| v(i)).collect()
    }

    #[test]
    fn heuristics_on_small_example() {
        let g = fixtures::figure6();
        assert_eq!(degen(&g, 1).len(), 3);
        assert_eq!(degen_opt(&g, 1), vs(&[1, 2, 3, 4]));
    }

    #[test]
    fn published_ordering_gives_published_suffix() {
        let g = fixtures::figure6();
        let info = DegeneracyInfo::from_order(&g, vs(&[1, 2, 5, 3, 4, 6, 7])).unwrap();
        assert_eq!(degen_in_order(&g, &info, 1), vs(&[4, 6, 7]));
    }

    #[test]
    fn heuristics_on_cliques_and_blocks() {
        let k5 = Graph::complete(5);
        assert_eq!(degen(&k5, 0), vec![0, 1, 2, 3, 4]);
        assert_eq!(degen_opt(&k5, 2), vec![0, 1, 2, 3, 4]);
        let g = fixtures::figure2();
        assert_eq!(degen(&g, 0), vs(&[8, 9, 10, 11, 12]));
        let opt = degen_opt(&g, 2);
        assert!(is_k_defective(&g, &opt, 2));
        assert!(opt.len() >= degen(&g, 2).len());
        assert_eq!(opt.len(), 5);
        assert!(degen(&Graph::empty(), 3).is_empty());
    }

    #[test]
    fn global_reduce_examples() {
        let g = fixtures::figure2();
        let r = global_reduce(&g, 5, 1);
        assert!(!r.origin.contains(&v(7)));
        assert_eq!(r.origin, vs(&[8, 9, 10, 11, 12]));
        assert_eq!(r.graph.m(), 10);

        let r = global_reduce(&Graph::complete(5), 5, 0);
        assert_eq!(r.graph.n(), 0);

        let r = global_reduce(&g, 0, 1);
        assert_eq!(r.graph.n(), g.n());
        assert_eq!(r.graph.m(), g.m());
    }

    #[test]
    fn reduction_keeps_every_larger_solution() {
        for seed in 0..60 {
            let g = gnp(14, 0.5, seed);
            for k in [0, 1, 3] {
                let opt = brute_force_max(&g, k, OracleBudget::default()).unwrap().len();
                if opt == 0 {
                    continue;
                }
                let r = global_reduce(&g, opt - 1, k);
                let again = brute_force_max(&r.graph, k, OracleBudget::default()).unwrap();
                assert_eq!(again.len(), opt, "seed {seed} k {k}");
                assert!(is_k_defective(&g, &r.lift(&again), k));
            }
        }
    }

    #[test]
    fn larger_lb_never_grows_the_graph() {
        for seed in 0..30 {
            let g = gnp(25, 0.4, seed);
            let mut prev = (usize::MAX, usize::MAX);
            for lb in 0..12 {
                let r = global_reduce(&g, lb, 2);
                let now = (r.graph.n(), r.graph.m());
                assert!(now.0 <= prev.0 && now.1 <= prev.1);
                prev = now;
            }
        }
    }

    #[test]
    fn preprocess_reports_sizes() {
        let g = fixtures::figure2();
        let (r, rep) = preprocess(&g, &SolverConfig::new(1));
        assert_eq!(rep.initial_size, 5);
        assert!(is_k_defective(&g, &rep.initial_clique, 1));
        assert_eq!((rep.reduced_n, rep.reduced_m), (r.graph.n(), r.graph.m()));
    }
}
