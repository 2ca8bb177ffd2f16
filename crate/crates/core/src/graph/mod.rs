//! Simple undirected graphs on at most 16 vertices.
//!
//! Adjacency is stored as one `u16` bit row per vertex. Edges are indexed in
//! lexicographic order of `(lo, hi)` endpoint pairs, and that index is what
//! the secular assembly and the boundary conditions refer to.

mod boundary;
mod canon;
mod enumerate;
mod families;
mod graph6;

pub use boundary::{BoundarySpec, Condition, InteriorSubgraph};
pub use canon::{canonical_form, canonical_label, canonical_order, CanonicalLabel};
pub use enumerate::{enumerate_connected, enumerate_trees, GraphClass};
pub use families::Family;
pub use graph6::{parse_graph6, write_graph6, Graph6Error};

use std::fmt;

use thiserror::Error;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count {0} outside 1..={MAX_VERTICES}")]
    VertexCount(usize),
    #[error("vertex {vertex} out of range for a graph on {p} vertices")]
    VertexOutOfRange { vertex: usize, p: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("repeated edge ({0}, {1})")]
    RepeatedEdge(usize, usize),
    #[error("vertex {0} is not pendant; boundary conditions apply only to degree-1 vertices")]
    NotPendant(usize),
    #[error("invalid family parameters: {0}")]
    FamilyParams(String),
    #[error("{what} = {value} outside supported range {range}")]
    Range {
        what: &'static str,
        value: usize,
        range: &'static str,
    },
}

/// A simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    p: usize,
    adj: [u16; MAX_VERTICES],
}

impl Graph {
    /// Graph on `p` vertices with no edges.
    pub fn empty(p: usize) -> Result<Self, GraphError> {
        if p == 0 || p > MAX_VERTICES {
            return Err(GraphError::VertexCount(p));
        }
        Ok(Graph {
            p,
            adj: [0; MAX_VERTICES],
        })
    }

    pub fn from_edges(p: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(p)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= p {
                    return Err(GraphError::VertexOutOfRange { vertex: w, p });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(GraphError::RepeatedEdge(u.min(v), u.max(v)));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn from_rows(p: usize, rows: &[u16]) -> Self {
        let mut adj = [0u16; MAX_VERTICES];
        adj[..p].copy_from_slice(&rows[..p]);
        Graph { p, adj }
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    /// Vertex count.
    pub fn p(&self) -> usize {
        self.p
    }

    /// Edge count.
    pub fn g(&self) -> usize {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn rows(&self) -> &[u16] {
        &self.adj[..self.p]
    }

    pub fn neighbors(&self, v: usize) -> u16 {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.p).map(|v| self.degree(v)).collect()
    }

    /// Degree-1 vertices, ascending.
    pub fn pendant_vertices(&self) -> Vec<usize> {
        (0..self.p).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Edges as `(lo, hi)` pairs in lexicographic order; position is the edge index.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.g());
        for u in 0..self.p {
            for v in u + 1..self.p {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// `(tail, head)` per edge index. Edges at a pendant vertex leave it;
    /// all other edges run from the lower to the higher index.
    pub fn orientation(&self) -> Vec<(usize, usize)> {
        self.edges()
            .into_iter()
            .map(|(u, v)| {
                if self.degree(v) == 1 && self.degree(u) != 1 {
                    (v, u)
                } else {
                    (u, v)
                }
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        let full: u32 = (1u32 << self.p) - 1;
        let mut seen: u32 = 1;
        let mut frontier: u32 = 1;
        while frontier != 0 {
            let mut next = 0u32;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v] as u32;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen & full == full
    }

    pub fn is_tree(&self) -> bool {
        self.g() + 1 == self.p && self.is_connected()
    }

    /// Two-colouring test by breadth-first search.
    pub fn is_bipartite(&self) -> bool {
        let mut colour = vec![None::<bool>; self.p];
        for start in 0..self.p {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                let c = colour[v].unwrap();
                for w in (0..self.p).filter(|&w| self.has_edge(v, w)) {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!c);
                            queue.push(w);
                        }
                        Some(cw) if cw == c => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// Relabel so that old vertex `order[k]` becomes vertex `k`.
    pub fn relabel(&self, order: &[usize]) -> Graph {
        assert_eq!(order.len(), self.p, "relabeling must be a permutation");
        let mut inv = [0usize; MAX_VERTICES];
        for (k, &v) in order.iter().enumerate() {
            inv[v] = k;
        }
        let mut adj = [0u16; MAX_VERTICES];
        for (k, &v) in order.iter().enumerate() {
            let mut row = self.adj[v];
            while row != 0 {
                let w = row.trailing_zeros() as usize;
                row &= row - 1;
                adj[k] |= 1 << inv[w];
            }
        }
        Graph { p: self.p, adj }
    }

    /// Adjacency matrix as 0/1 integers.
    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.p)
            .map(|u| (0..self.p).map(|v| self.has_edge(u, v) as i64).collect())
            .collect()
    }

    /// Subgraph induced by `keep` (in the given order).
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut adj = [0u16; MAX_VERTICES];
        for (a, &u) in keep.iter().enumerate() {
            for (b, &v) in keep.iter().enumerate() {
                if self.has_edge(u, v) {
                    adj[a] |= 1 << b;
                }
            }
        }
        Graph { p: keep.len(), adj }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(p={}, edges={:?})", self.p, self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_graph6(self))
    }
}
