//! Undirected simple graphs over dense vertex indices `0..n`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{invalid_param, Error, Result};

/// Undirected simple graph. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Edges are unordered pairs; self-loops,
    /// duplicates and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(invalid_param(format!("edge ({u}, {v}) out of range for n = {n}")));
            }
            if u == v {
                return Err(invalid_param(format!("self-loop at vertex {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(invalid_param(format!("duplicate edge ({u}, {v})")));
            }
        }
        Ok(Self::from_sorted_unique(n, seen.into_iter().collect()))
    }

    /// `edges` must hold distinct `(u, v)` pairs with `u < v < n`.
    pub(crate) fn from_sorted_unique(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Self { n, edges, adjacency }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted_unique(n, Vec::new())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// Maximum vertex degree, 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Parses the DIMACS-like text format: a `p edge <n> <m>` line followed by
    /// `e <u> <v>` lines with 1-based endpoints. `c` lines and blank lines are
    /// ignored.
    pub fn from_dimacs(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let parse_err = |message: String| Error::Parse { line: line_no, message };
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            let mut fields = line.split_whitespace();
            match fields.next() {
                Some("p") => {
                    if header.is_some() {
                        return Err(parse_err("duplicate problem line".into()));
                    }
                    let kind = fields.next();
                    if !matches!(kind, Some("edge") | Some("col")) {
                        return Err(parse_err(format!("unsupported problem type {kind:?}")));
                    }
                    let n = parse_count(fields.next(), "vertex count").map_err(parse_err)?;
                    let m = parse_count(fields.next(), "edge count").map_err(parse_err)?;
                    header = Some((n, m));
                }
                Some("e") => {
                    let Some((n, _)) = header else {
                        return Err(parse_err("edge line before problem line".into()));
                    };
                    let u = parse_count(fields.next(), "endpoint").map_err(parse_err)?;
                    let v = parse_count(fields.next(), "endpoint").map_err(parse_err)?;
                    if u == 0 || v == 0 || u > n || v > n {
                        return Err(parse_err(format!("endpoint out of range 1..={n}")));
                    }
                    edges.push((u - 1, v - 1));
                }
                Some(other) => return Err(parse_err(format!("unknown line type {other:?}"))),
                None => {}
            }
        }
        let Some((n, m)) = header else {
            return Err(Error::Parse { line: 0, message: "missing problem line".into() });
        };
        if edges.len() != m {
            return Err(Error::Parse {
                line: 0,
                message: format!("header declares {m} edges but {} were listed", edges.len()),
            });
        }
        Graph::new(n, edges)
    }

    /// Writes the graph in the format read by [`Graph::from_dimacs`].
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p edge {} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "e {} {}", u + 1, v + 1);
        }
        out
    }
}

fn parse_count(field: Option<&str>, what: &str) -> std::result::Result<usize, String> {
    let f = field.ok_or_else(|| format!("missing {what}"))?;
    f.parse().map_err(|_| format!("invalid {what} {f:?}"))
}
