use std::cell::Cell;

use crate::colored::ColoredMultiGraph;

/// The three query functions of the local representation of a colored
/// multigraph, each with its own call counter.
///
/// g1(v, i): index of the i-th edge incident to v, or 0. Incident edges
///   are listed ascending by edge index; a self-loop appears once in the
///   list even though it adds two to the degree.
/// g2(j): the j-th edge as (u, v, color), 1-based in input order; None
///   past the end.
/// g3(i, j): the i-th vertex of degree exactly j (ascending vertex ids),
///   or 0.
pub struct LocalRep {
    incident: Vec<Vec<u32>>,
    edges: Vec<(u32, u32, u32)>,
    by_degree: Vec<Vec<u32>>,
    g1_calls: Cell<u64>,
    g2_calls: Cell<u64>,
    g3_calls: Cell<u64>,
}

impl LocalRep {
    pub fn new(m: &ColoredMultiGraph) -> LocalRep {
        let n = m.n();
        let mut incident: Vec<Vec<u32>> = vec![Vec::new(); n];
        let mut degree = vec![0usize; n];
        for (idx, &(a, b, _)) in m.edges().iter().enumerate() {
            let j = idx as u32 + 1;
            incident[a as usize - 1].push(j);
            degree[a as usize - 1] += 1;
            degree[b as usize - 1] += 1;
            if a != b {
                incident[b as usize - 1].push(j);
            }
        }
        let max_deg = degree.iter().copied().max().unwrap_or(0);
        let mut by_degree: Vec<Vec<u32>> = vec![Vec::new(); max_deg + 1];
        for v in 0..n {
            by_degree[degree[v]].push(v as u32 + 1);
        }
        LocalRep {
            incident,
            edges: m.edges().to_vec(),
            by_degree,
            g1_calls: Cell::new(0),
            g2_calls: Cell::new(0),
            g3_calls: Cell::new(0),
        }
    }

    pub fn n(&self) -> usize {
        self.incident.len()
    }

    pub fn g1(&self, v: u32, i: usize) -> u32 {
        self.g1_calls.set(self.g1_calls.get() + 1);
        assert!(v >= 1 && v as usize <= self.incident.len(), "vertex {v} out of range");
        let list = &self.incident[v as usize - 1];
        if i >= 1 && i <= list.len() {
            list[i - 1]
        } else {
            0
        }
    }

    pub fn g2(&self, j: usize) -> Option<(u32, u32, u32)> {
        self.g2_calls.set(self.g2_calls.get() + 1);
        if j >= 1 && j <= self.edges.len() {
            Some(self.edges[j - 1])
        } else {
            None
        }
    }

    pub fn g3(&self, i: usize, j: usize) -> u32 {
        self.g3_calls.set(self.g3_calls.get() + 1);
        if i == 0 {
            return 0;
        }
        match self.by_degree.get(j) {
            Some(vs) if i <= vs.len() => vs[i - 1],
            _ => 0,
        }
    }

    pub fn g1_calls(&self) -> u64 {
        self.g1_calls.get()
    }

    pub fn g2_calls(&self) -> u64 {
        self.g2_calls.get()
    }

    pub fn g3_calls(&self) -> u64 {
        self.g3_calls.get()
    }
}

pub fn local_representation(m: &ColoredMultiGraph) -> LocalRep {
    LocalRep::new(m)
}
