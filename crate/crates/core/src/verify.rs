//! Ground-truth checks that depend only on the definition of a k-defective
//! clique, plus the branching-factor constant of the exact search.
//!
//! Nothing here touches the solver's rules or bounds; agreement between the
//! two is therefore real evidence.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Limits for exhaustive search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_n: usize,
    pub max_nodes: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self {
            max_n: 30,
            max_nodes: 1 << 32,
        }
    }
}

/// `true` iff `set` misses at most `k` edges.
pub fn is_k_defective(g: &Graph, set: &[usize], k: usize) -> bool {
    g.count_non_edges(set) <= k
}

/// Maximum k-defective clique of `g` by plain include/exclude enumeration.
pub fn brute_force_max(g: &Graph, k: usize, budget: OracleBudget) -> Result<Vec<usize>> {
    let all: Vec<usize> = (0..g.n()).collect();
    brute_force_max_within(g, &all, &[], k, budget)
}

/// Largest k-defective clique `C` with `required ⊆ C ⊆ vertices`.
///
/// `required` must itself be k-defective and contained in `vertices`;
/// otherwise the result is empty. The answer lists vertex ids ascending.
pub fn brute_force_max_within(
    g: &Graph,
    vertices: &[usize],
    required: &[usize],
    k: usize,
    budget: OracleBudget,
) -> Result<Vec<usize>> {
    if vertices.len() > budget.max_n || vertices.len() > 64 {
        return Err(Error::OracleBudget(format!(
            "{} vertices exceeds cap {}",
            vertices.len(),
            budget.max_n.min(64)
        )));
    }
    if !required.iter().all(|r| vertices.contains(r)) || !is_k_defective(g, required, k) {
        return Ok(Vec::new());
    }
    let local: Vec<usize> = vertices.to_vec();
    let adj: Vec<u64> = local
        .iter()
        .map(|&a| {
            local
                .iter()
                .enumerate()
                .filter(|&(_, &b)| g.has_edge(a, b))
                .fold(0u64, |m, (j, _)| m | 1 << j)
        })
        .collect();
    let mut forced = 0u64;
    for r in required {
        let j = local.iter().position(|x| x == r).unwrap();
        forced |= 1 << j;
    }
    let mut search = Exhaustive {
        adj: &adj,
        k,
        forced,
        best: 0,
        best_size: 0,
        nodes: 0,
        max_nodes: budget.max_nodes,
    };
    let start_nonedges = pair_deficit(&adj, forced);
    search.run(0, forced, start_nonedges)?;
    let mut out: Vec<usize> = (0..local.len())
        .filter(|&j| search.best >> j & 1 == 1)
        .map(|j| local[j])
        .collect();
    out.sort_unstable();
    Ok(out)
}

fn pair_deficit(adj: &[u64], set: u64) -> usize {
    let s = set.count_ones() as usize;
    let edges: usize = (0..adj.len())
        .filter(|&j| set >> j & 1 == 1)
        .map(|j| (adj[j] & set).count_ones() as usize)
        .sum::<usize>()
        / 2;
    s * s.saturating_sub(1) / 2 - edges
}

struct Exhaustive<'a> {
    adj: &'a [u64],
    k: usize,
    forced: u64,
    best: u64,
    best_size: u32,
    nodes: u64,
    max_nodes: u64,
}

impl Exhaustive<'_> {
    fn run(&mut self, i: usize, set: u64, nonedges: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::OracleBudget(format!("more than {} nodes", self.max_nodes)));
        }
        if i == self.adj.len() {
            if set.count_ones() > self.best_size {
                self.best = set;
                self.best_size = set.count_ones();
            }
            return Ok(());
        }
        if self.forced >> i & 1 == 1 {
            return self.run(i + 1, set, nonedges);
        }
        let missing = set.count_ones() as usize - (self.adj[i] & set).count_ones() as usize;
        if nonedges + missing <= self.k {
            self.run(i + 1, set | 1 << i, nonedges + missing)?;
        }
        self.run(i + 1, set, nonedges)
    }
}

/// Maximum clique by enumerating cliques only (no defect budget at all).
pub fn brute_force_max_clique(g: &Graph) -> Vec<usize> {
    fn grow(g: &Graph, clique: &mut Vec<usize>, from: usize, best: &mut Vec<usize>) {
        if clique.len() > best.len() {
            *best = clique.clone();
        }
        for v in from..g.n() {
            if clique.iter().all(|&c| g.has_edge(c, v)) {
                clique.push(v);
                grow(g, clique, v + 1, best);
                clique.pop();
            }
        }
    }
    let mut best = Vec::new();
    grow(g, &mut Vec::new(), 0, &mut best);
    best
}

/// Largest real root of `x^(k+3) - 2x^(k+2) + 1`, the base of the search
/// tree bound for budget `k`.
///
/// Found by bisection on the equivalent `x^(k+2) - (x^(k+1) + ... + x + 1)`,
/// which is negative at 1 and positive at 2 and has no root at `x = 1`.
pub fn gamma_k(k: usize) -> f64 {
    let p = |x: f64| {
        let mut pow = 1.0;
        let mut series = 0.0;
        for _ in 0..=k + 1 {
            series += pow;
            pow *= x;
        }
        pow - series
    };
    let (mut lo, mut hi) = (1.0f64, 2.0f64);
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if p(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{self, v};

    #[test]
    fn validity_checks() {
        let g = fixtures::figure2();
        let left: Vec<usize> = (1..=6).map(v).collect();
        assert!(is_k_defective(&g, &left, 2));
        assert!(!is_k_defective(&g, &left, 1));
        assert!(is_k_defective(&g, &[], 0));
        let k5 = Graph::complete(5);
        assert!(is_k_defective(&k5, &[0, 1, 2, 3, 4], 0));
    }

    #[test]
    fn figure_optima() {
        let b = OracleBudget::default();
        let g = fixtures::figure2();
        assert_eq!(brute_force_max(&g, 0, b).unwrap().len(), 5);
        assert_eq!(brute_force_max(&g, 1, b).unwrap().len(), 5);
        assert_eq!(brute_force_max(&g, 2, b).unwrap(), (1..=6).map(v).collect::<Vec<_>>());
        assert_eq!(brute_force_max(&fixtures::figure6(), 1, b).unwrap().len(), 4);
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]);
        assert_eq!(brute_force_max(&path, 1, b).unwrap().len(), 3);
        assert_eq!(brute_force_max(&Graph::empty(), 3, b).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn required_vertices_are_respected() {
        let g = fixtures::figure4();
        let all: Vec<usize> = (0..11).collect();
        let best = brute_force_max_within(&g, &all, &[0, 1], 3, OracleBudget::default()).unwrap();
        assert_eq!(best.len(), 3);
        assert!(best.contains(&0) && best.contains(&1));
    }

    #[test]
    fn budget_errors() {
        let g = Graph::complete(12);
        let small = OracleBudget { max_n: 10, max_nodes: 1000 };
        assert!(matches!(brute_force_max(&g, 0, small), Err(Error::OracleBudget(_))));
        let few_nodes = OracleBudget { max_n: 30, max_nodes: 5 };
        assert!(brute_force_max(&g, 0, few_nodes).is_err());
    }

    #[test]
    fn clique_oracle() {
        assert_eq!(brute_force_max_clique(&fixtures::figure2()).len(), 5);
        assert_eq!(brute_force_max_clique(&Graph::empty()).len(), 0);
        assert_eq!(brute_force_max_clique(&fixtures::figure4()).len(), 3);
    }

    #[test]
    fn gamma_is_increasing_below_two() {
        let mut prev = 1.0;
        for k in 0..12 {
            let g = gamma_k(k);
            assert!(g > prev && g < 2.0);
            prev = g;
        }
        assert!((gamma_k(0) - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-9);
    }
}
