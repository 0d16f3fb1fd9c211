use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// Simple undirected graph on vertices 1..=n. No self-loops, no parallel
/// edges. Edges are stored sorted as (u, v) with u < v, so equality,
/// hashing, and serialization are canonical. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        Graph { n, edges: Vec::new() }
    }

    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<Graph, GraphError> {
        let mut es: Vec<(u32, u32)> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop { v: a });
            }
            for v in [a, b] {
                if v == 0 || v as usize > n {
                    return Err(GraphError::VertexOutOfRange { v, n });
                }
            }
            es.push((a.min(b), a.max(b)));
        }
        es.sort_unstable();
        if let Some(w) = es.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge { u: w[0].0, v: w[0].1 });
        }
        Ok(Graph { n, edges: es })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        if u == v {
            return false;
        }
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).is_ok()
    }

    /// Sorted adjacency lists, indexed by vertex - 1.
    pub fn adjacency(&self) -> Vec<Vec<u32>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u as usize - 1].push(v);
            adj[v as usize - 1].push(u);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        adj
    }

    pub fn neighbors(&self, v: u32) -> Vec<u32> {
        assert!(v >= 1 && v as usize <= self.n, "vertex {v} out of range");
        let mut out: Vec<u32> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            d[u as usize - 1] += 1;
            d[v as usize - 1] += 1;
        }
        d
    }

    pub fn degree(&self, v: u32) -> usize {
        assert!(v >= 1 && v as usize <= self.n, "vertex {v} out of range");
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    /// Per-vertex neighbor bitmasks; only valid for n <= 64 (bit v-1 set
    /// when v is a neighbor). The exact-scan kernels live on this.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bitmask adjacency needs n <= 64, got {}", self.n);
        let mut m = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            m[u as usize - 1] |= 1 << (v - 1);
            m[v as usize - 1] |= 1 << (u - 1);
        }
        m
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.component_of(1).len() == self.n
    }

    /// Vertices reachable from start (inclusive), ascending.
    pub fn component_of(&self, start: u32) -> Vec<u32> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut stack = vec![start];
        seen[start as usize - 1] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v as usize - 1] {
                if !seen[w as usize - 1] {
                    seen[w as usize - 1] = true;
                    stack.push(w);
                }
            }
        }
        (1..=self.n as u32).filter(|&v| seen[v as usize - 1]).collect()
    }

    pub fn connected_components(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for v in 1..=self.n as u32 {
            if !seen[v as usize - 1] {
                let comp = self.component_of(v);
                for &w in &comp {
                    seen[w as usize - 1] = true;
                }
                comps.push(comp);
            }
        }
        comps
    }

    /// New graph with one edge removed (no-op if absent).
    pub fn without_edge(&self, u: u32, v: u32) -> Graph {
        let key = (u.min(v), u.max(v));
        Graph {
            n: self.n,
            edges: self.edges.iter().copied().filter(|&e| e != key).collect(),
        }
    }

    /// Subgraph induced by the given vertices, relabeled 1..=k in the
    /// order given. Returns the graph and the vertex list actually used.
    pub fn induced(&self, verts: &[u32]) -> Graph {
        let mut pos = vec![0u32; self.n + 1];
        for (i, &v) in verts.iter().enumerate() {
            pos[v as usize] = i as u32 + 1;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| pos[u as usize] != 0 && pos[v as usize] != 0)
            .map(|&(u, v)| (pos[u as usize], pos[v as usize]))
            .collect::<Vec<_>>();
        Graph::from_edges(verts.len(), edges).expect("induced subgraph of a valid graph")
    }
}
