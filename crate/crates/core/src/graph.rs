//! Immutable simple undirected graph in CSR form.
//!
//! Vertices are dense ids `0..n`. Every vertex keeps the label it had in the
//! input so results can be reported in the caller's vocabulary. Graphs up to
//! [`DENSE_THRESHOLD`] vertices also carry a bit matrix for O(1) pair tests.

use std::collections::HashMap;
use std::io::BufRead;

use crate::error::{Error, Result};

/// Largest vertex count for which a dense adjacency matrix is materialized.
pub const DENSE_THRESHOLD: usize = 4096;

#[derive(Clone, Debug)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
    dense: Option<DenseMatrix>,
    labels: Vec<String>,
}

#[derive(Clone, Debug)]
struct DenseMatrix {
    words_per_row: usize,
    bits: Vec<u64>,
}

impl DenseMatrix {
    fn build(offsets: &[usize], targets: &[usize]) -> Self {
        let n = offsets.len() - 1;
        let words_per_row = n.div_ceil(64);
        let mut bits = vec![0u64; n * words_per_row];
        for u in 0..n {
            let row = &mut bits[u * words_per_row..(u + 1) * words_per_row];
            for &v in &targets[offsets[u]..offsets[u + 1]] {
                row[v / 64] |= 1 << (v % 64);
            }
        }
        Self { words_per_row, bits }
    }

    #[inline]
    fn get(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words_per_row + v / 64] >> (v % 64) & 1 == 1
    }
}

/// Counters collected while reading an edge list.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParseReport {
    pub lines: usize,
    pub edges_read: usize,
    pub duplicates: usize,
    pub self_loops: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices labelled `"0".."n-1"`.
    ///
    /// Self-loops and repeated pairs are dropped silently. Panics if an
    /// endpoint is out of range.
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::from_labelled_edges(labels, edges)
    }

    /// Same as [`Graph::from_edges`] with explicit vertex labels.
    pub fn from_labelled_edges<I>(labels: Vec<String>, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::build(labels, edges).0
    }

    fn build<I>(labels: Vec<String>, edges: I) -> (Self, usize, usize)
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = labels.len();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut self_loops = 0;
        let mut pushed = 0;
        for (u, v) in edges {
            assert!(u < n && v < n, "edge ({u}, {v}) out of range for n = {n}");
            if u == v {
                self_loops += 1;
                continue;
            }
            adj[u].push(v);
            adj[v].push(u);
            pushed += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut targets = Vec::new();
        offsets.push(0);
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            targets.extend_from_slice(list);
            offsets.push(targets.len());
        }
        let duplicates = pushed - targets.len() / 2;
        let dense = (n <= DENSE_THRESHOLD && n > 0).then(|| DenseMatrix::build(&offsets, &targets));
        let g = Self {
            offsets,
            targets,
            dense,
            labels,
        };
        (g, duplicates, self_loops)
    }

    pub fn empty() -> Self {
        Self::from_edges(0, std::iter::empty())
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        Self::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.offsets[u + 1] - self.offsets[u]
    }

    /// Sorted neighbor list of `u`.
    #[inline]
    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.targets[self.offsets[u]..self.offsets[u + 1]]
    }

    /// Position of `u`'s first neighbor in the flat target array. Slots
    /// `offset(u)..offset(u + 1)` index the half-edges of `u`.
    #[inline]
    pub(crate) fn offset(&self, u: usize) -> usize {
        self.offsets[u]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v {
            return false;
        }
        match &self.dense {
            Some(d) => d.get(u, v),
            None => {
                let (a, b) = if self.degree(u) <= self.degree(v) {
                    (u, v)
                } else {
                    (v, u)
                };
                self.neighbors(a).binary_search(&b).is_ok()
            }
        }
    }

    pub fn label(&self, u: usize) -> &str {
        &self.labels[u]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Iterates every edge once as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Subgraph induced by `vertices`. Vertex `i` of the result is
    /// `vertices[i]` here and inherits its label.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut local = HashMap::with_capacity(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            assert!(v < self.n(), "vertex {v} out of range");
            let prev = local.insert(v, i);
            assert!(prev.is_none(), "vertex {v} listed twice");
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for w in self.neighbors(v) {
                if let Some(&j) = local.get(w) {
                    if i < j {
                        edges.push((i, j));
                    }
                }
            }
        }
        let labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        Graph::from_labelled_edges(labels, edges)
    }

    /// Keeps all vertices but only the listed edges (which must exist here).
    pub fn edge_subgraph(&self, edges: &[(usize, usize)]) -> Graph {
        debug_assert!(edges.iter().all(|&(u, v)| self.has_edge(u, v)));
        Graph::from_labelled_edges(self.labels.clone(), edges.iter().copied())
    }

    /// Number of vertex pairs inside `set` that are not edges.
    pub fn count_non_edges(&self, set: &[usize]) -> usize {
        let s = set.len();
        let mut inside = 0usize;
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                if self.has_edge(u, v) {
                    inside += 1;
                }
            }
        }
        s * s.saturating_sub(1) / 2 - inside
    }
}

/// Reads a whitespace-separated edge list.
///
/// Lines starting with `#` or `%` and blank lines are skipped. Tokens are
/// arbitrary strings; vertices are numbered in order of first appearance.
pub fn load_edge_list<R: BufRead>(reader: R) -> Result<(Graph, ParseReport)> {
    let mut ids: HashMap<String, usize> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut edges = Vec::new();
    let mut report = ParseReport::default();
    let mut intern = |tok: &str, labels: &mut Vec<String>| -> usize {
        if let Some(&id) = ids.get(tok) {
            return id;
        }
        let id = labels.len();
        ids.insert(tok.to_owned(), id);
        labels.push(tok.to_owned());
        id
    };
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        report.lines += 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('%') {
            continue;
        }
        let toks: Vec<&str> = trimmed.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::Parse {
                line: idx + 1,
                message: format!("expected 2 vertex tokens, found {}", toks.len()),
            });
        }
        let u = intern(toks[0], &mut labels);
        let v = intern(toks[1], &mut labels);
        edges.push((u, v));
        report.edges_read += 1;
    }
    let (g, duplicates, self_loops) = Graph::build(labels, edges);
    report.duplicates = duplicates;
    report.self_loops = self_loops;
    Ok((g, report))
}

/// Convenience wrapper around [`load_edge_list`] for in-memory text.
pub fn parse_edge_list(text: &str) -> Result<(Graph, ParseReport)> {
    load_edge_list(text.as_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn triangle() {
        let (g, report) = parse_edge_list("1 2\n2 3\n3 1\n").unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
        assert_eq!(report.duplicates, 0);
        assert!(g.has_edge(0, 1));
        assert!(!g.has_edge(0, 0));
    }

    #[test]
    fn dedup_and_self_loops_are_reported() {
        let (g, report) = parse_edge_list("1 2\n1 2\n2 1\n3 3\n").unwrap();
        assert_eq!((g.n(), g.m()), (3, 1));
        assert_eq!(report.duplicates, 2);
        assert_eq!(report.self_loops, 1);
        assert_eq!(g.labels(), ["1", "2", "3"]);
    }

    #[test]
    fn comments_blank_lines_and_string_tokens() {
        let text = "# header\n% other\n\nalice bob\n  bob   carol  \n";
        let (g, report) = parse_edge_list(text).unwrap();
        assert_eq!((g.n(), g.m()), (3, 2));
        assert_eq!(report.lines, 5);
        assert_eq!(g.label(2), "carol");
    }

    #[test]
    fn malformed_line_reports_line_number() {
        let err = parse_edge_list("1 2\n3\n").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
        assert!(parse_edge_list("1 2 3\n").is_err());
    }

    #[test]
    fn empty_input_is_empty_graph() {
        let (g, _) = parse_edge_list("").unwrap();
        assert_eq!((g.n(), g.m()), (0, 0));
        assert_eq!(g.count_non_edges(&[]), 0);
    }

    #[test]
    fn figure2_counts_and_missing_pair() {
        let g = fixtures::figure2();
        assert_eq!((g.n(), g.m()), (12, 26));
        assert!(!g.has_edge(fixtures::v(2), fixtures::v(4)));
        assert!(g.has_edge(fixtures::v(2), fixtures::v(3)));
    }

    #[test]
    fn induced_subgraphs_of_figure2() {
        let g = fixtures::figure2();
        let left: Vec<usize> = (1..=6).map(fixtures::v).collect();
        let h = g.induced_subgraph(&left);
        assert_eq!((h.n(), h.m()), (6, 13));
        // local ids follow the slice order, so v_i is i-1 again
        assert!(!h.has_edge(0, 4));
        assert!(!h.has_edge(1, 3));
        assert_eq!(h.label(0), "v1");

        let right: Vec<usize> = (8..=12).map(fixtures::v).collect();
        let k5 = g.induced_subgraph(&right);
        assert_eq!((k5.n(), k5.m()), (5, 10));
        assert_eq!(g.induced_subgraph(&[]).n(), 0);
    }

    #[test]
    fn non_edge_counts() {
        let g = fixtures::figure2();
        let left: Vec<usize> = (1..=6).map(fixtures::v).collect();
        assert_eq!(g.count_non_edges(&left), 2);
        let k5 = Graph::complete(5);
        assert_eq!(k5.count_non_edges(&[0, 2, 4]), 0);
        let f6 = fixtures::figure6();
        let set: Vec<usize> = [4, 6, 7].into_iter().map(fixtures::v).collect();
        assert_eq!(f6.count_non_edges(&set), 1);
    }

    #[test]
    fn sparse_lookup_matches_dense() {
        let n = DENSE_THRESHOLD + 10;
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).chain([(0, n - 1)]).collect();
        let g = Graph::from_edges(n, edges);
        assert!(g.dense.is_none());
        assert!(g.has_edge(0, n - 1));
        assert!(g.has_edge(n - 1, 0));
        assert!(!g.has_edge(0, 2));
        assert_eq!(g.m(), n);
    }
}
