use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// Directed multigraph with integer-colored arcs. Arcs keep input order
/// and exact multiplicity; self-loops allowed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectedColoredMultiGraph {
    n: usize,
    arcs: Vec<(u32, u32, u32)>,
}

impl DirectedColoredMultiGraph {
    pub fn empty(n: usize) -> DirectedColoredMultiGraph {
        DirectedColoredMultiGraph { n, arcs: Vec::new() }
    }

    pub fn from_arcs(
        n: usize,
        arcs: impl IntoIterator<Item = (u32, u32, u32)>,
    ) -> Result<DirectedColoredMultiGraph, GraphError> {
        let mut list = Vec::new();
        for (a, b, c) in arcs {
            for v in [a, b] {
                if v == 0 || v as usize > n {
                    return Err(GraphError::VertexOutOfRange { v, n });
                }
            }
            list.push((a, b, c));
        }
        Ok(DirectedColoredMultiGraph { n, arcs: list })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(u32, u32, u32)] {
        &self.arcs
    }

    pub fn max_color(&self) -> u32 {
        self.arcs.iter().map(|&(_, _, c)| c).max().unwrap_or(0)
    }

    /// Incident arcs at v, in-degree plus out-degree; a directed self-loop
    /// counts two (once out, once in).
    pub fn incident_arc_count(&self, v: u32) -> usize {
        self.arcs
            .iter()
            .map(|&(a, b, _)| (a == v) as usize + (b == v) as usize)
            .sum()
    }

    pub fn incident_arc_counts(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n];
        for &(a, b, _) in &self.arcs {
            d[a as usize - 1] += 1;
            d[b as usize - 1] += 1;
        }
        d
    }

    /// True if some ordered pair carries two arcs of the same color.
    pub fn has_duplicate_arc(&self) -> bool {
        let mut seen: Vec<(u32, u32, u32)> = self.arcs.clone();
        seen.sort_unstable();
        seen.windows(2).any(|w| w[0] == w[1])
    }
}
