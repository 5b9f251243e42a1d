//! Immutable simple undirected graphs with dense vertex and edge ids.
//!
//! Edges are numbered `0..m` in input order and every piece of coloring
//! state elsewhere in the crate is keyed by that id. Adjacency is stored in
//! compressed form: the incidences of vertex `v` live in
//! `incidences[offsets[v]..offsets[v + 1]]` as `(neighbor, edge id)` pairs.

use std::collections::HashSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {edge} is a self-loop at vertex {vertex}")]
    SelfLoop { edge: usize, vertex: VertexId },
    #[error("edge {edge} ({u}, {v}) duplicates edge {first}")]
    DuplicateEdge {
        edge: usize,
        first: usize,
        u: VertexId,
        v: VertexId,
    },
    #[error("edge {edge} ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange {
        edge: usize,
        u: VertexId,
        v: VertexId,
        n: usize,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    endpoints: Vec<(VertexId, VertexId)>,
    offsets: Vec<usize>,
    incidences: Vec<(VertexId, EdgeId)>,
    max_degree: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices. Edge `i` of the input gets id `i`.
    pub fn new(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut seen = std::collections::HashMap::with_capacity(edges.len());
        let mut degree = vec![0usize; n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { edge: i, u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { edge: i, vertex: u });
            }
            let key = (u.min(v), u.max(v));
            if let Some(&first) = seen.get(&key) {
                return Err(GraphError::DuplicateEdge {
                    edge: i,
                    first,
                    u,
                    v,
                });
            }
            seen.insert(key, i);
            degree[u] += 1;
            degree[v] += 1;
        }
        Ok(Self::from_checked(n, edges.to_vec(), &degree))
    }

    /// Builds a graph from edges already known to be simple and in range.
    /// Used when materializing subgraphs of a valid graph.
    pub(crate) fn from_simple_edges(n: usize, endpoints: Vec<(VertexId, VertexId)>) -> Self {
        let mut degree = vec![0usize; n];
        for &(u, v) in &endpoints {
            debug_assert!(u != v && u < n && v < n);
            degree[u] += 1;
            degree[v] += 1;
        }
        Self::from_checked(n, endpoints, &degree)
    }

    fn from_checked(n: usize, endpoints: Vec<(VertexId, VertexId)>, degree: &[usize]) -> Self {
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for &d in degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut incidences = vec![(0, 0); 2 * endpoints.len()];
        for (e, &(u, v)) in endpoints.iter().enumerate() {
            incidences[fill[u]] = (v, e);
            fill[u] += 1;
            incidences[fill[v]] = (u, e);
            fill[v] += 1;
        }
        let max_degree = degree.iter().copied().max().unwrap_or(0);
        Graph {
            n,
            endpoints,
            offsets,
            incidences,
            max_degree,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.endpoints.len()
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Δ, the maximum degree (0 for an edgeless graph).
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    #[inline]
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.endpoints[e]
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.endpoints
    }

    /// `(neighbor, edge id)` pairs incident to `v`.
    #[inline]
    pub fn incident(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.incidences[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Offset of `v`'s first incidence in a flat per-incidence array.
    #[inline]
    pub(crate) fn incidence_offset(&self, v: VertexId) -> usize {
        self.offsets[v]
    }

    #[inline]
    pub fn other_endpoint(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.endpoints[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    /// w(e) = min{d(u), d(v)}.
    #[inline]
    pub fn edge_weight(&self, e: EdgeId) -> u64 {
        let (u, v) = self.endpoints[e];
        self.degree(u).min(self.degree(v)) as u64
    }

    /// w(G), the sum of all edge weights.
    pub fn weight(&self) -> u64 {
        (0..self.edge_count()).map(|e| self.edge_weight(e)).sum()
    }

    pub fn degeneracy(&self) -> usize {
        degeneracy(self)
    }

    pub fn stats(&self) -> GraphStats {
        let w = self.weight();
        let m = self.edge_count();
        GraphStats {
            max_degree: self.max_degree,
            graph_weight: w,
            degeneracy: self.degeneracy(),
            normalized_weight: if m == 0 { 0.0 } else { w as f64 / m as f64 },
        }
    }

    /// Edge list with each pair as `(min, max)`, sorted.
    pub fn canonical_edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut edges: Vec<_> = self
            .endpoints
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        edges.sort_unstable();
        edges
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.incident(a).iter().any(|&(x, _)| x == b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GraphStats {
    pub max_degree: usize,
    pub graph_weight: u64,
    /// Reporting proxy for arboricity; always an upper bound on it.
    pub degeneracy: usize,
    pub normalized_weight: f64,
}

/// Largest back-degree seen while repeatedly peeling a minimum-degree
/// vertex. Bucket queue, O(n + m).
pub fn degeneracy(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let max_d = g.max_degree();
    let mut buckets: Vec<Vec<VertexId>> = vec![Vec::new(); max_d + 1];
    for v in 0..n {
        buckets[deg[v]].push(v);
    }
    let mut removed = vec![false; n];
    let mut best = 0;
    let mut cursor = 0;
    let mut done = 0;
    while done < n {
        // Buckets hold stale entries; skip anything whose degree moved.
        let v = loop {
            while buckets[cursor].is_empty() {
                cursor += 1;
            }
            let v = buckets[cursor].pop().unwrap();
            if !removed[v] && deg[v] == cursor {
                break v;
            }
        };
        removed[v] = true;
        done += 1;
        best = best.max(cursor);
        for &(x, _) in g.incident(v) {
            if !removed[x] {
                deg[x] -= 1;
                buckets[deg[x]].push(x);
                if deg[x] < cursor {
                    cursor = deg[x];
                }
            }
        }
    }
    best
}

/// Parses the edge-list format: a header `n m`, then `m` lines `u v`.
/// Blank lines and lines starting with `#` are ignored.
pub fn read_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(GraphError::Parse {
        line: 0,
        message: "missing header".into(),
    })?;
    let (n, m) = parse_pair(hline, header)?;

    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        if edges.len() == m {
            return Err(GraphError::Parse {
                line,
                message: format!("more than the {m} edges announced in the header"),
            });
        }
        edges.push(parse_pair(line, l)?);
    }
    if edges.len() != m {
        return Err(GraphError::Parse {
            line: text.lines().count(),
            message: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    Graph::new(n, &edges)
}

fn parse_pair(line: usize, l: &str) -> Result<(usize, usize), GraphError> {
    let mut it = l.split_whitespace();
    let mut next = || -> Result<usize, GraphError> {
        let tok = it.next().ok_or_else(|| GraphError::Parse {
            line,
            message: "expected two integers".into(),
        })?;
        tok.parse().map_err(|_| GraphError::Parse {
            line,
            message: format!("invalid integer {tok:?}"),
        })
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(GraphError::Parse {
            line,
            message: "trailing tokens".into(),
        });
    }
    Ok((a, b))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(12 * (g.edge_count() + 1));
    writeln!(out, "{} {}", g.vertex_count(), g.edge_count()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Counts distinct unordered pairs; used by generators to reject duplicates.
pub(crate) fn pair_key(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    (u.min(v), u.max(v))
}

pub(crate) type PairSet = HashSet<(VertexId, VertexId)>;
