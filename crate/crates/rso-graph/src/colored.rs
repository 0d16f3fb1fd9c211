use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::Graph;

/// Undirected multigraph with integer-colored edges. Self-loops and
/// parallel edges are allowed and multiplicities are exact: the same
/// (u, v, color) may appear repeatedly. Endpoints are normalized u <= v
/// but input order is preserved, because edge indices (the local
/// representation's g2) are assigned in input order.
///
/// Colors are normally >= 1; color 0 is reserved as a "non-edge" marker
/// by the dense degree-reduction and is rejected wherever eligibility
/// matters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoredMultiGraph {
    n: usize,
    edges: Vec<(u32, u32, u32)>,
}

impl ColoredMultiGraph {
    pub fn empty(n: usize) -> ColoredMultiGraph {
        ColoredMultiGraph { n, edges: Vec::new() }
    }

    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (u32, u32, u32)>,
    ) -> Result<ColoredMultiGraph, GraphError> {
        let mut es = Vec::new();
        for (a, b, c) in edges {
            for v in [a, b] {
                if v == 0 || v as usize > n {
                    return Err(GraphError::VertexOutOfRange { v, n });
                }
            }
            es.push((a.min(b), a.max(b), c));
        }
        Ok(ColoredMultiGraph { n, edges: es })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(u32, u32, u32)] {
        &self.edges
    }

    pub fn max_color(&self) -> u32 {
        self.edges.iter().map(|&(_, _, c)| c).max().unwrap_or(0)
    }

    pub fn colors(&self) -> Vec<u32> {
        let mut cs: Vec<u32> = self.edges.iter().map(|&(_, _, c)| c).collect();
        cs.sort_unstable();
        cs.dedup();
        cs
    }

    /// Degree with the multigraph convention: a self-loop contributes two.
    pub fn degree(&self, v: u32) -> usize {
        self.edges
            .iter()
            .map(|&(a, b, _)| (a == v) as usize + (b == v) as usize)
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n];
        for &(a, b, _) in &self.edges {
            d[a as usize - 1] += 1;
            d[b as usize - 1] += 1;
        }
        d
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn has_self_loop(&self, v: u32) -> bool {
        self.edges.iter().any(|&(a, b, _)| a == v && b == v)
    }

    /// Parallel classes: unordered endpoint pair -> indices (0-based,
    /// input order) of the edges on that pair. Self-loops form the
    /// class of their (v, v) pair.
    pub fn parallel_classes(&self) -> BTreeMap<(u32, u32), Vec<usize>> {
        let mut classes: BTreeMap<(u32, u32), Vec<usize>> = BTreeMap::new();
        for (i, &(a, b, _)) in self.edges.iter().enumerate() {
            classes.entry((a, b)).or_default().push(i);
        }
        classes
    }

    /// Eligible means: every vertex carries at least one self-loop, all
    /// colors are >= 1, and edges sharing an endpoint pair carry pairwise
    /// distinct colors. This is the normal form the gadget de-coloring
    /// consumes.
    pub fn is_eligible(&self) -> bool {
        if self.edges.iter().any(|&(_, _, c)| c == 0) {
            return false;
        }
        let mut has_loop = vec![false; self.n];
        for &(a, b, _) in &self.edges {
            if a == b {
                has_loop[a as usize - 1] = true;
            }
        }
        if !has_loop.iter().all(|&h| h) {
            return false;
        }
        for idxs in self.parallel_classes().values() {
            let mut cs: Vec<u32> = idxs.iter().map(|&i| self.edges[i].2).collect();
            cs.sort_unstable();
            let len = cs.len();
            cs.dedup();
            if cs.len() != len {
                return false;
            }
        }
        true
    }

    /// Underlying simple graph: self-loops dropped, parallels and colors
    /// collapsed.
    pub fn underlying_simple(&self) -> Graph {
        let mut es: Vec<(u32, u32)> = self
            .edges
            .iter()
            .filter(|&&(a, b, _)| a != b)
            .map(|&(a, b, _)| (a, b))
            .collect();
        es.sort_unstable();
        es.dedup();
        Graph::from_edges(self.n, es).expect("valid by construction")
    }

    /// Remap colors through f, preserving everything else.
    pub fn recolored(&self, f: impl Fn(u32) -> u32) -> ColoredMultiGraph {
        ColoredMultiGraph {
            n: self.n,
            edges: self.edges.iter().map(|&(a, b, c)| (a, b, f(c))).collect(),
        }
    }
}
