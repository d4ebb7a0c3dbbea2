//! Degree sequences, realized hypergraphs and the four statistics counted
//! on a realization.
//!
//! Edges are stored canonically (vertex indices sorted ascending) so that
//! multiset equality is plain sequence equality.

use std::collections::HashMap;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ValidationError {
    #[error("stub mismatch: vertex stubs {vertex_total} != edge slots {edge_total}")]
    StubMismatch { vertex_total: u64, edge_total: u64 },
    #[error("stub mismatch (out/tail side): {vertex_total} != {edge_total}")]
    StubMismatchOut { vertex_total: u64, edge_total: u64 },
    #[error("stub mismatch (in/head side): {vertex_total} != {edge_total}")]
    StubMismatchIn { vertex_total: u64, edge_total: u64 },
    #[error("edge {0} has zero slots")]
    EmptyEdge(usize),
    #[error("edge {0} has an empty tail")]
    EmptyTail(usize),
    #[error("edge {0} has an empty head")]
    EmptyHead(usize),
    #[error("tail and head degree lists have different lengths ({tails} vs {heads})")]
    LengthMismatch { tails: usize, heads: usize },
    #[error("degree sequence has no vertices")]
    NoVertices,
}

/// Prescribed degrees of an undirected hypergraph: `vertex_degrees[v]` stubs
/// per vertex and `edge_degrees[e]` slots per hyperedge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedDegreeSequence {
    vertex_degrees: Vec<u64>,
    edge_degrees: Vec<u64>,
}

impl UndirectedDegreeSequence {
    pub fn new(
        vertex_degrees: Vec<u64>,
        edge_degrees: Vec<u64>,
    ) -> Result<Self, ValidationError> {
        if vertex_degrees.is_empty() {
            return Err(ValidationError::NoVertices);
        }
        if let Some(e) = edge_degrees.iter().position(|&d| d == 0) {
            return Err(ValidationError::EmptyEdge(e));
        }
        let vertex_total: u64 = vertex_degrees.iter().sum();
        let edge_total: u64 = edge_degrees.iter().sum();
        if vertex_total != edge_total {
            return Err(ValidationError::StubMismatch {
                vertex_total,
                edge_total,
            });
        }
        Ok(Self {
            vertex_degrees,
            edge_degrees,
        })
    }

    pub fn vertex_degrees(&self) -> &[u64] {
        &self.vertex_degrees
    }

    pub fn edge_degrees(&self) -> &[u64] {
        &self.edge_degrees
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_degrees.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edge_degrees.len()
    }

    /// Total stub count `S`.
    pub fn total_stubs(&self) -> u64 {
        self.vertex_degrees.iter().sum()
    }
}

/// Prescribed degrees of a directed hypergraph. `tail_degrees` and
/// `head_degrees` are index-aligned per hyperedge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedDegreeSequence {
    out_degrees: Vec<u64>,
    in_degrees: Vec<u64>,
    tail_degrees: Vec<u64>,
    head_degrees: Vec<u64>,
}

impl DirectedDegreeSequence {
    pub fn new(
        out_degrees: Vec<u64>,
        in_degrees: Vec<u64>,
        tail_degrees: Vec<u64>,
        head_degrees: Vec<u64>,
    ) -> Result<Self, ValidationError> {
        if out_degrees.is_empty() || in_degrees.is_empty() {
            return Err(ValidationError::NoVertices);
        }
        if out_degrees.len() != in_degrees.len() {
            return Err(ValidationError::LengthMismatch {
                tails: out_degrees.len(),
                heads: in_degrees.len(),
            });
        }
        if tail_degrees.len() != head_degrees.len() {
            return Err(ValidationError::LengthMismatch {
                tails: tail_degrees.len(),
                heads: head_degrees.len(),
            });
        }
        if let Some(e) = tail_degrees.iter().position(|&d| d == 0) {
            return Err(ValidationError::EmptyTail(e));
        }
        if let Some(e) = head_degrees.iter().position(|&d| d == 0) {
            return Err(ValidationError::EmptyHead(e));
        }
        let out_total: u64 = out_degrees.iter().sum();
        let tail_total: u64 = tail_degrees.iter().sum();
        if out_total != tail_total {
            return Err(ValidationError::StubMismatchOut {
                vertex_total: out_total,
                edge_total: tail_total,
            });
        }
        let in_total: u64 = in_degrees.iter().sum();
        let head_total: u64 = head_degrees.iter().sum();
        if in_total != head_total {
            return Err(ValidationError::StubMismatchIn {
                vertex_total: in_total,
                edge_total: head_total,
            });
        }
        Ok(Self {
            out_degrees,
            in_degrees,
            tail_degrees,
            head_degrees,
        })
    }

    pub fn out_degrees(&self) -> &[u64] {
        &self.out_degrees
    }

    pub fn in_degrees(&self) -> &[u64] {
        &self.in_degrees
    }

    pub fn tail_degrees(&self) -> &[u64] {
        &self.tail_degrees
    }

    pub fn head_degrees(&self) -> &[u64] {
        &self.head_degrees
    }

    pub fn num_vertices(&self) -> usize {
        self.out_degrees.len()
    }

    pub fn num_edges(&self) -> usize {
        self.tail_degrees.len()
    }

    /// Total out-stub count `S_out`.
    pub fn total_out_stubs(&self) -> u64 {
        self.out_degrees.iter().sum()
    }

    /// Total in-stub count `S_in`.
    pub fn total_in_stubs(&self) -> u64 {
        self.in_degrees.iter().sum()
    }
}

/// One realized undirected hypergraph. Each edge is a vertex multiset stored
/// as a sorted index sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Builds from raw edge slot assignments; sorts each edge.
    pub fn new(n: usize, mut edges: Vec<Vec<usize>>) -> Self {
        for e in &mut edges {
            e.sort_unstable();
        }
        Self { n, edges }
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Edges containing some vertex with multiplicity at least two.
    pub fn count_degenerate(&self) -> u64 {
        self.edges
            .iter()
            .filter(|e| e.windows(2).any(|w| w[0] == w[1]))
            .count() as u64
    }

    /// Unordered pairs of identical edges; a group of k equal edges
    /// contributes k(k-1)/2.
    pub fn count_multi_pairs(&self) -> u64 {
        let mut groups: HashMap<&[usize], u64> = HashMap::new();
        for e in &self.edges {
            *groups.entry(e.as_slice()).or_default() += 1;
        }
        groups.values().map(|&k| k * (k - 1) / 2).sum()
    }

    pub fn counts(&self) -> StatisticCounts {
        StatisticCounts {
            degenerate: self.count_degenerate(),
            multi_pairs: self.count_multi_pairs(),
            self_loops: None,
            weak_self_loops: None,
        }
    }

    /// Checks the realization against its generating sequence: slot counts
    /// per edge and per-vertex occurrence totals.
    pub fn validate_against(&self, ds: &UndirectedDegreeSequence) -> bool {
        if self.n != ds.num_vertices() || self.edges.len() != ds.num_edges() {
            return false;
        }
        if self
            .edges
            .iter()
            .zip(ds.edge_degrees())
            .any(|(e, &d)| e.len() as u64 != d)
        {
            return false;
        }
        let mut occ = vec![0u64; self.n];
        for e in &self.edges {
            for &v in e {
                if v >= self.n {
                    return false;
                }
                occ[v] += 1;
            }
        }
        occ.as_slice() == ds.vertex_degrees()
    }
}

/// One realized directed hypergraph: per edge a (tail, head) pair of sorted
/// vertex multisets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedHypergraph {
    n: usize,
    edges: Vec<(Vec<usize>, Vec<usize>)>,
}

impl DirectedHypergraph {
    pub fn new(n: usize, mut edges: Vec<(Vec<usize>, Vec<usize>)>) -> Self {
        for (t, h) in &mut edges {
            t.sort_unstable();
            h.sort_unstable();
        }
        Self { n, edges }
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(Vec<usize>, Vec<usize>)] {
        &self.edges
    }

    /// Edges with a repeated vertex in the tail or in the head.
    pub fn count_degenerate(&self) -> u64 {
        self.edges
            .iter()
            .filter(|(t, h)| {
                t.windows(2).any(|w| w[0] == w[1]) || h.windows(2).any(|w| w[0] == w[1])
            })
            .count() as u64
    }

    /// Pairs with equal tails and equal heads.
    pub fn count_multi_pairs(&self) -> u64 {
        let mut groups: HashMap<(&[usize], &[usize]), u64> = HashMap::new();
        for (t, h) in &self.edges {
            *groups.entry((t.as_slice(), h.as_slice())).or_default() += 1;
        }
        groups.values().map(|&k| k * (k - 1) / 2).sum()
    }

    /// Edges whose tail equals the head as a multiset.
    pub fn count_self_loops(&self) -> u64 {
        self.edges.iter().filter(|(t, h)| t == h).count() as u64
    }

    /// Edges whose tail and head share at least one vertex (set semantics).
    pub fn count_weak_self_loops(&self) -> u64 {
        self.edges
            .iter()
            .filter(|(t, h)| {
                // both sides sorted: merge scan
                let (mut i, mut j) = (0, 0);
                while i < t.len() && j < h.len() {
                    match t[i].cmp(&h[j]) {
                        std::cmp::Ordering::Equal => return true,
                        std::cmp::Ordering::Less => i += 1,
                        std::cmp::Ordering::Greater => j += 1,
                    }
                }
                false
            })
            .count() as u64
    }

    pub fn counts(&self) -> StatisticCounts {
        StatisticCounts {
            degenerate: self.count_degenerate(),
            multi_pairs: self.count_multi_pairs(),
            self_loops: Some(self.count_self_loops()),
            weak_self_loops: Some(self.count_weak_self_loops()),
        }
    }

    pub fn validate_against(&self, dds: &DirectedDegreeSequence) -> bool {
        if self.n != dds.num_vertices() || self.edges.len() != dds.num_edges() {
            return false;
        }
        for ((t, h), (&dt, &dh)) in self
            .edges
            .iter()
            .zip(dds.tail_degrees().iter().zip(dds.head_degrees()))
        {
            if t.len() as u64 != dt || h.len() as u64 != dh {
                return false;
            }
        }
        let mut out = vec![0u64; self.n];
        let mut inc = vec![0u64; self.n];
        for (t, h) in &self.edges {
            for &v in t {
                if v >= self.n {
                    return false;
                }
                out[v] += 1;
            }
            for &v in h {
                if v >= self.n {
                    return false;
                }
                inc[v] += 1;
            }
        }
        out.as_slice() == dds.out_degrees() && inc.as_slice() == dds.in_degrees()
    }
}

/// The four statistics of one realization. Self-loop counts are only
/// defined for directed hypergraphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StatisticCounts {
    pub degenerate: u64,
    pub multi_pairs: u64,
    pub self_loops: Option<u64>,
    pub weak_self_loops: Option<u64>,
}
