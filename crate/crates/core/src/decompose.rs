//! Degeneracy ordering, k-core and k-truss peeling.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use crate::graph::Graph;

/// A degeneracy ordering together with its inverse and the degeneracy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyInfo {
    pub order: Vec<usize>,
    pub rank: Vec<usize>,
    pub delta: usize,
}

impl DegeneracyInfo {
    /// Wraps an externally supplied order after checking that every vertex
    /// has minimum degree among those not yet peeled. Returns `None` if the
    /// order is not a permutation or not a degeneracy ordering.
    pub fn from_order(g: &Graph, order: Vec<usize>) -> Option<Self> {
        let n = g.n();
        if order.len() != n {
            return None;
        }
        let mut rank = vec![usize::MAX; n];
        for (i, &u) in order.iter().enumerate() {
            if u >= n || rank[u] != usize::MAX {
                return None;
            }
            rank[u] = i;
        }
        let mut deg: Vec<usize> = (0..n).map(|u| g.degree(u)).collect();
        let mut removed = vec![false; n];
        let mut delta = 0;
        for &u in &order {
            let min = (0..n).filter(|&w| !removed[w]).map(|w| deg[w]).min()?;
            if deg[u] != min {
                return None;
            }
            delta = delta.max(min);
            removed[u] = true;
            for &w in g.neighbors(u) {
                if !removed[w] {
                    deg[w] -= 1;
                }
            }
        }
        Some(Self { order, rank, delta })
    }

    /// Neighbors of `u` that come later in the ordering.
    pub fn later_neighbors<'g>(&'g self, g: &'g Graph, u: usize) -> impl Iterator<Item = usize> + 'g {
        let r = self.rank[u];
        g.neighbors(u).iter().copied().filter(move |&w| self.rank[w] > r)
    }
}

/// Repeatedly removes a minimum-degree vertex, smallest id first among ties.
pub fn degeneracy_ordering(g: &Graph) -> DegeneracyInfo {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|u| g.degree(u)).collect();
    let max_deg = deg.iter().copied().max().unwrap_or(0);
    // one min-heap of ids per degree; stale entries are skipped on pop
    let mut buckets: Vec<BinaryHeap<Reverse<usize>>> = vec![BinaryHeap::new(); max_deg + 1];
    for u in 0..n {
        buckets[deg[u]].push(Reverse(u));
    }
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut rank = vec![0; n];
    let mut delta = 0;
    let mut cur = 0;
    while order.len() < n {
        let u = loop {
            match buckets[cur].pop() {
                Some(Reverse(u)) if !removed[u] && deg[u] == cur => break u,
                Some(_) => {}
                None => cur += 1,
            }
        };
        delta = delta.max(cur);
        removed[u] = true;
        rank[u] = order.len();
        order.push(u);
        for &w in g.neighbors(u) {
            if !removed[w] {
                deg[w] -= 1;
                buckets[deg[w]].push(Reverse(w));
            }
        }
        cur = cur.saturating_sub(1);
    }
    DegeneracyInfo { order, rank, delta }
}

/// Linear-time min-degree peeling order of a graph on `0..count` given by
/// its degrees and `local_adj(i)`, the neighbors of `i`. Ties are
/// unspecified.
pub(crate) fn bucket_peel<F, I>(count: usize, degrees: &[usize], mut local_adj: F) -> Vec<usize>
where
    F: FnMut(usize) -> I,
    I: IntoIterator<Item = usize>,
{
    let max_deg = degrees.iter().copied().max().unwrap_or(0);
    let mut deg = degrees.to_vec();
    let mut bin = vec![0usize; max_deg + 2];
    for &d in &deg {
        bin[d + 1] += 1;
    }
    for d in 1..bin.len() {
        bin[d] += bin[d - 1];
    }
    let mut vert = vec![0usize; count];
    let mut pos = vec![0usize; count];
    {
        let mut next = bin.clone();
        for (i, &d) in deg.iter().enumerate() {
            pos[i] = next[d];
            vert[next[d]] = i;
            next[d] += 1;
        }
    }
    for i in 0..count {
        let u = vert[i];
        for w in local_adj(u) {
            if pos[w] > i {
                // swap w to the front of its bin, then shrink the bin
                let dw = deg[w];
                let front = bin[dw].max(i + 1);
                let x = vert[front];
                if x != w {
                    vert.swap(pos[w], front);
                    pos[x] = pos[w];
                    pos[w] = front;
                }
                bin[dw] = front + 1;
                deg[w] -= 1;
            }
        }
    }
    vert
}

/// Vertices of the `c`-core, ascending.
pub fn k_core(g: &Graph, c: usize) -> Vec<usize> {
    let mask = core_mask(g, c, None);
    (0..g.n()).filter(|&u| mask[u]).collect()
}

/// Membership mask of the `c`-core restricted to `alive` (all vertices if
/// `None`).
pub(crate) fn core_mask(g: &Graph, c: usize, alive: Option<&[bool]>) -> Vec<bool> {
    let n = g.n();
    let mut keep: Vec<bool> = match alive {
        Some(a) => a.to_vec(),
        None => vec![true; n],
    };
    if c == 0 {
        return keep;
    }
    let mut deg: Vec<usize> = (0..n)
        .map(|u| g.neighbors(u).iter().filter(|&&w| keep[w]).count())
        .collect();
    let mut queue: VecDeque<usize> = (0..n).filter(|&u| keep[u] && deg[u] < c).collect();
    for &u in &queue {
        keep[u] = false;
    }
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if keep[w] {
                deg[w] -= 1;
                if deg[w] < c {
                    keep[w] = false;
                    queue.push_back(w);
                }
            }
        }
    }
    keep
}

/// Edges of the `t`-truss as `(u, v)` with `u < v`, sorted.
///
/// Every surviving edge lies in at least `t - 2` triangles formed by
/// surviving edges. `t <= 2` returns every edge.
pub fn k_truss(g: &Graph, t: usize) -> Vec<(usize, usize)> {
    let alive = truss_mask(g, t);
    g.edges()
        .filter(|&(u, v)| alive[edge_slot(g, u, v)])
        .collect()
}

#[inline]
fn edge_slot(g: &Graph, u: usize, v: usize) -> usize {
    g.offset(u) + g.neighbors(u).binary_search(&v).expect("edge exists")
}

/// Per half-edge slot flag: `true` if the edge survives truss peeling.
/// Both slots of an edge always agree.
fn truss_mask(g: &Graph, t: usize) -> Vec<bool> {
    let slots = 2 * g.m();
    let mut alive = vec![true; slots];
    if t <= 2 {
        return alive;
    }
    let need = t - 2;
    let n = g.n();
    // twin[slot] = slot of the reverse half-edge
    let mut twin = vec![0usize; slots];
    for u in 0..n {
        for (i, &v) in g.neighbors(u).iter().enumerate() {
            if u < v {
                let a = g.offset(u) + i;
                let b = edge_slot(g, v, u);
                twin[a] = b;
                twin[b] = a;
            }
        }
    }
    // triangle support, counted once per edge on the u < v slot
    let mut support = vec![0usize; slots];
    let mut mark = vec![usize::MAX; n];
    for u in 0..n {
        for (i, &w) in g.neighbors(u).iter().enumerate() {
            mark[w] = g.offset(u) + i;
        }
        for (i, &v) in g.neighbors(u).iter().enumerate() {
            if v <= u {
                continue;
            }
            let mut s = 0;
            for &w in g.neighbors(v) {
                if mark[w] != usize::MAX && w != u {
                    s += 1;
                }
            }
            let a = g.offset(u) + i;
            support[a] = s;
            support[twin[a]] = s;
        }
        for &w in g.neighbors(u) {
            mark[w] = usize::MAX;
        }
    }
    // `alive` flips when an edge is queued, `removed` when it is processed;
    // a triangle is charged only while none of its edges is processed yet
    let mut removed = vec![false; slots];
    let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
    for u in 0..n {
        for (i, &v) in g.neighbors(u).iter().enumerate() {
            let a = g.offset(u) + i;
            if u < v && support[a] < need {
                alive[a] = false;
                alive[twin[a]] = false;
                queue.push_back((u, a));
            }
        }
    }
    while let Some((u, a)) = queue.pop_front() {
        let v = g.neighbors(u)[a - g.offset(u)];
        removed[a] = true;
        removed[twin[a]] = true;
        let (nu, nv) = (g.neighbors(u), g.neighbors(v));
        let (mut i, mut j) = (0, 0);
        while i < nu.len() && j < nv.len() {
            match nu[i].cmp(&nv[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    let uw = g.offset(u) + i;
                    let vw = g.offset(v) + j;
                    if !removed[uw] && !removed[vw] {
                        for (src, e) in [(u, uw), (v, vw)] {
                            support[e] -= 1;
                            support[twin[e]] -= 1;
                            if alive[e] && support[e] < need {
                                alive[e] = false;
                                alive[twin[e]] = false;
                                queue.push_back((src, e));
                            }
                        }
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
    }
    alive
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{self, v};
    use crate::generate;

    fn brute_core(g: &Graph, c: usize) -> Vec<usize> {
        // remove any low-degree vertex, highest id first, until none is left
        let mut alive = vec![true; g.n()];
        loop {
            let victim = (0..g.n()).rev().find(|&u| {
                alive[u] && g.neighbors(u).iter().filter(|&&w| alive[w]).count() < c
            });
            match victim {
                Some(u) => alive[u] = false,
                None => break,
            }
        }
        (0..g.n()).filter(|&u| alive[u]).collect()
    }

    fn brute_truss(g: &Graph, t: usize) -> Vec<(usize, usize)> {
        let mut edges: Vec<(usize, usize)> = g.edges().collect();
        loop {
            let h = Graph::from_edges(g.n(), edges.iter().copied());
            let before = edges.len();
            edges.retain(|&(a, b)| {
                let common = h.neighbors(a).iter().filter(|&&w| h.has_edge(b, w)).count();
                common + 2 >= t
            });
            if edges.len() == before {
                return edges;
            }
        }
    }

    #[test]
    fn figure2_degeneracy_ordering_matches_drawing() {
        let g = fixtures::figure2();
        let info = degeneracy_ordering(&g);
        let expected: Vec<usize> = [7, 1, 2, 3, 4, 5, 6, 8, 9, 10, 11, 12].into_iter().map(v).collect();
        assert_eq!(info.order, expected);
        assert_eq!(info.delta, 4);
        for (i, &u) in info.order.iter().enumerate() {
            assert_eq!(info.rank[u], i);
        }
    }

    #[test]
    fn figure6_published_order_is_a_degeneracy_ordering() {
        let g = fixtures::figure6();
        let published: Vec<usize> = [1, 2, 5, 3, 4, 6, 7].into_iter().map(v).collect();
        assert!(DegeneracyInfo::from_order(&g, published).is_some());
        let ours = degeneracy_ordering(&g);
        let expected: Vec<usize> = (1..=7).map(v).collect();
        assert_eq!(ours.order, expected);
        assert!(DegeneracyInfo::from_order(&g, ours.order.clone()).is_some());
        // not a degeneracy ordering: v3 has degree 4 at the start
        let bad: Vec<usize> = [3, 1, 2, 4, 5, 6, 7].into_iter().map(v).collect();
        assert!(DegeneracyInfo::from_order(&g, bad).is_none());
    }

    #[test]
    fn complete_graph_degeneracy() {
        assert_eq!(degeneracy_ordering(&Graph::complete(5)).delta, 4);
        assert_eq!(degeneracy_ordering(&Graph::empty()).delta, 0);
    }

    #[test]
    fn figure2_cores() {
        let g = fixtures::figure2();
        let four: Vec<usize> = (0..12).filter(|&u| u != v(7)).collect();
        assert_eq!(k_core(&g, 4), four);
        assert!(k_core(&g, 5).is_empty());
        assert_eq!(k_core(&g, 0).len(), 12);
    }

    #[test]
    fn figure2_trusses() {
        let g = fixtures::figure2();
        let four = k_truss(&g, 4);
        assert_eq!(four.len(), 23);
        for e in [(1, 7), (6, 7), (5, 7)] {
            assert!(!four.contains(&(v(e.0), v(e.1))));
        }
        let five = k_truss(&g, 5);
        assert_eq!(five.len(), 10);
        assert!(five.iter().all(|&(a, b)| a >= v(8) && b >= v(8)));
        assert_eq!(k_truss(&g, 3).len(), 26);
    }

    #[test]
    fn triangle_is_a_three_truss() {
        let g = Graph::complete(3);
        assert_eq!(k_truss(&g, 3).len(), 3);
        assert!(k_truss(&g, 4).is_empty());
    }

    #[test]
    fn random_graphs_agree_with_brute_force_peeling() {
        for seed in 0..100 {
            let n = 5 + (seed as usize * 7) % 46;
            let p = [0.1, 0.3, 0.6][seed as usize % 3];
            let g = generate::gnp(n, p, seed);
            for c in 0..6 {
                let fast = k_core(&g, c);
                assert_eq!(fast, brute_core(&g, c), "seed {seed} c {c}");
                let sub = g.induced_subgraph(&fast);
                assert_eq!(k_core(&sub, c).len(), fast.len(), "idempotence");
                if c > 0 {
                    let looser = k_core(&g, c - 1);
                    assert!(fast.iter().all(|u| looser.contains(u)));
                }
            }
            for t in 2..6 {
                let truss = k_truss(&g, t);
                assert_eq!(truss, brute_truss(&g, t), "seed {seed} t {t}");
                let core = k_core(&g, t - 1);
                assert!(truss.iter().all(|(a, b)| core.contains(a) && core.contains(b)));
            }
            let info = degeneracy_ordering(&g);
            let checked = DegeneracyInfo::from_order(&g, info.order.clone()).expect("valid");
            assert_eq!(checked.delta, info.delta);
            assert!(info.delta * info.delta <= 2 * g.m());
            // delta is attained, and no c-core exists above it
            assert!(!k_core(&g, info.delta).is_empty() || g.n() == 0);
            assert!(k_core(&g, info.delta + 1).is_empty());
        }
    }

    #[test]
    fn bucket_peel_is_a_degeneracy_ordering() {
        for seed in 0..30 {
            let g = generate::gnp(40, 0.2, seed);
            let degrees: Vec<usize> = (0..g.n()).map(|u| g.degree(u)).collect();
            let order = bucket_peel(g.n(), &degrees, |u| g.neighbors(u).to_vec());
            assert!(DegeneracyInfo::from_order(&g, order).is_some(), "seed {seed}");
        }
    }
}
