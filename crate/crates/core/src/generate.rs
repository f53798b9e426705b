//! Seeded random graph generators for tests, examples and benchmarks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// Erdős–Rényi `G(n, p)`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Holme–Kim preferential attachment with triad closure: each new vertex
/// attaches `per_vertex` edges, and after every preferential edge a
/// triangle-closing edge is tried with probability `p_triad`.
///
/// Produces the heavy-tailed, clustered structure typical of social
/// networks.
pub fn powerlaw_cluster(n: usize, per_vertex: usize, p_triad: f64, seed: u64) -> Graph {
    assert!(per_vertex >= 1 && n > per_vertex);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    // endpoint multiset for degree-proportional sampling
    let mut ends: Vec<usize> = Vec::new();
    let add = |adj: &mut Vec<Vec<usize>>, ends: &mut Vec<usize>, u: usize, v: usize| {
        adj[u].push(v);
        adj[v].push(u);
        ends.push(u);
        ends.push(v);
    };
    for u in 0..=per_vertex {
        for v in u + 1..=per_vertex {
            add(&mut adj, &mut ends, u, v);
        }
    }
    for u in per_vertex + 1..n {
        let mut targets: Vec<usize> = Vec::with_capacity(per_vertex);
        let mut last: Option<usize> = None;
        let mut guard = 0;
        while targets.len() < per_vertex && guard < 50 * per_vertex {
            guard += 1;
            let triad = last.filter(|_| rng.gen_bool(p_triad)).and_then(|w| {
                let cands: Vec<usize> = adj[w]
                    .iter()
                    .copied()
                    .filter(|&x| x != u && !targets.contains(&x))
                    .collect();
                cands.choose(&mut rng).copied()
            });
            let t = match triad {
                Some(t) => t,
                None => ends[rng.gen_range(0..ends.len())],
            };
            if t == u || targets.contains(&t) {
                continue;
            }
            targets.push(t);
            last = Some(t);
        }
        for t in targets {
            add(&mut adj, &mut ends, u, t);
        }
    }
    let edges = adj
        .iter()
        .enumerate()
        .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
        .collect::<Vec<_>>();
    Graph::from_edges(n, edges)
}

/// Adds a community on `members` that is complete except for `missing`
/// randomly chosen pairs. Returns the new graph.
pub fn plant_near_clique(g: &Graph, members: &[usize], missing: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            pairs.push((a.min(b), a.max(b)));
        }
    }
    pairs.shuffle(&mut rng);
    let dropped: Vec<(usize, usize)> = pairs[..missing.min(pairs.len())].to_vec();
    let edges = g
        .edges()
        .filter(|e| !dropped.contains(e))
        .chain(pairs[missing.min(pairs.len())..].iter().copied())
        .collect::<Vec<_>>();
    Graph::from_labelled_edges(g.labels().to_vec(), edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic() {
        let a = gnp(30, 0.3, 7);
        let b = gnp(30, 0.3, 7);
        assert_eq!(a.edges().collect::<Vec<_>>(), b.edges().collect::<Vec<_>>());
        let c = powerlaw_cluster(500, 3, 0.5, 1);
        assert!(c.m() >= 3 * 490);
        assert_eq!(c.n(), 500);
    }

    #[test]
    fn planted_community_has_requested_gaps() {
        let g = gnp(60, 0.05, 3);
        let members: Vec<usize> = (10..22).collect();
        let h = plant_near_clique(&g, &members, 3, 9);
        assert_eq!(h.count_non_edges(&members), 3);
    }
}
