//! Small hand-built graphs used throughout the tests and examples.
//!
//! Vertex `v_i` of each figure graph has internal id `i - 1` and label
//! `"v{i}"`, so `v(3)` is the vertex drawn as v3.

use crate::graph::Graph;

/// Internal id of the vertex labelled `v{i}`.
#[inline]
pub fn v(i: usize) -> usize {
    i - 1
}

fn numbered(n: usize, edges: &[(usize, usize)]) -> Graph {
    let labels = (1..=n).map(|i| format!("v{i}")).collect();
    Graph::from_labelled_edges(labels, edges.iter().map(|&(a, b)| (v(a), v(b))))
}

pub const FIGURE2_EDGES: [(usize, usize); 26] = [
    (1, 2), (1, 3), (1, 4), (1, 6), (1, 7), (2, 3), (2, 5), (2, 6), (3, 4),
    (3, 5), (3, 6), (4, 5), (4, 6), (5, 6), (5, 7), (6, 7), (8, 9), (8, 10),
    (8, 11), (8, 12), (9, 10), (9, 11), (9, 12), (10, 11), (10, 12), (11, 12),
];

pub const FIGURE6_EDGES: [(usize, usize); 11] = [
    (1, 2), (1, 3), (1, 4), (2, 3), (2, 5), (3, 4), (3, 6), (4, 7), (5, 6),
    (5, 7), (6, 7),
];

/// Twelve vertices: a 7-vertex block whose maximum 2-defective clique is
/// v1..v6, plus a disjoint K5 on v8..v12.
pub fn figure2() -> Graph {
    numbered(12, &FIGURE2_EDGES)
}

/// Seven-vertex graph used to illustrate the degeneracy heuristics.
pub fn figure6() -> Graph {
    numbered(7, &FIGURE6_EDGES)
}

/// Two isolated vertices `s1, s2` (ids 0, 1) next to the complete 3-partite
/// graph with parts `{a1,a2,a3}`, `{b1,b2,b3}`, `{c1,c2,c3}` (ids 2..11).
pub fn figure4() -> Graph {
    let mut labels = vec!["s1".to_string(), "s2".to_string()];
    for part in ["a", "b", "c"] {
        for i in 1..=3 {
            labels.push(format!("{part}{i}"));
        }
    }
    let mut edges = Vec::new();
    for u in 2..11 {
        for w in u + 1..11 {
            if (u - 2) / 3 != (w - 2) / 3 {
                edges.push((u, w));
            }
        }
    }
    Graph::from_labelled_edges(labels, edges)
}

/// Parts of [`figure4`] as internal ids.
pub fn figure4_parts() -> [Vec<usize>; 3] {
    [vec![2, 3, 4], vec![5, 6, 7], vec![8, 9, 10]]
}

/// Nine-vertex graph behaving like the branching walkthrough: v1 is
/// universal, `g1 = {v2..v5}` misses (v2,v4) and (v3,v5), `g2 = {v6..v9}`
/// only has edges (v6,v7) and (v8,v9), and every g1 vertex sees every g2
/// vertex.
pub fn branching_walkthrough() -> Graph {
    let mut edges = Vec::new();
    for i in 2..=9 {
        edges.push((1, i));
    }
    for (a, b) in [(2, 3), (2, 5), (3, 4), (4, 5), (6, 7), (8, 9)] {
        edges.push((a, b));
    }
    for a in 2..=5 {
        for b in 6..=9 {
            edges.push((a, b));
        }
    }
    numbered(9, &edges)
}
