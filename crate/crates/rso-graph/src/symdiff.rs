use std::collections::HashMap;

use crate::colored::ColoredMultiGraph;
use crate::directed::DirectedColoredMultiGraph;
use crate::graph::Graph;
use crate::perm::Permutation;

/// Relabel a simple graph: edge {u, v} becomes {mu(u), mu(v)}.
pub fn apply_permutation(g: &Graph, mu: &Permutation) -> Graph {
    assert_eq!(g.n(), mu.n(), "permutation degree must match graph order");
    let es: Vec<(u32, u32)> = g.edges().iter().map(|&(u, v)| (mu.apply(u), mu.apply(v))).collect();
    Graph::from_edges(g.n(), es).expect("relabeling a valid graph stays valid")
}

/// |E(g) symdiff E(h)| for simple graphs on the same vertex set.
pub fn symdiff(g: &Graph, h: &Graph) -> usize {
    assert_eq!(g.n(), h.n(), "graphs must share a vertex count");
    // Both edge lists are sorted; a merge counts the one-sided entries.
    let (ge, he) = (g.edges(), h.edges());
    let (mut i, mut j, mut count) = (0usize, 0usize, 0usize);
    while i < ge.len() && j < he.len() {
        match ge[i].cmp(&he[j]) {
            std::cmp::Ordering::Less => {
                count += 1;
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                count += 1;
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    count + (ge.len() - i) + (he.len() - j)
}

/// Relabel a colored multigraph vertex-wise; colors ride along.
pub fn apply_permutation_colored(g: &ColoredMultiGraph, mu: &Permutation) -> ColoredMultiGraph {
    assert_eq!(g.n(), mu.n(), "permutation degree must match graph order");
    let es: Vec<(u32, u32, u32)> =
        g.edges().iter().map(|&(u, v, c)| (mu.apply(u), mu.apply(v), c)).collect();
    ColoredMultiGraph::from_edges(g.n(), es).expect("relabeling a valid graph stays valid")
}

/// Relabel a directed multigraph; arcs stay ordered pairs.
pub fn apply_permutation_directed(
    g: &DirectedColoredMultiGraph,
    mu: &Permutation,
) -> DirectedColoredMultiGraph {
    assert_eq!(g.n(), mu.n(), "permutation degree must match graph order");
    let arcs: Vec<(u32, u32, u32)> =
        g.arcs().iter().map(|&(u, v, c)| (mu.apply(u), mu.apply(v), c)).collect();
    DirectedColoredMultiGraph::from_arcs(g.n(), arcs).expect("relabeling a valid graph stays valid")
}

/// Multiset symmetric difference between two colored multigraphs: per
/// (endpoints, color) key, the absolute multiplicity gap, summed. Equals
/// the sum over colors of the per-color multiset differences.
pub fn colored_multiset_symdiff(g: &ColoredMultiGraph, h: &ColoredMultiGraph) -> usize {
    assert_eq!(g.n(), h.n(), "graphs must share a vertex count");
    let mut counts: HashMap<(u32, u32, u32), i64> = HashMap::new();
    for &e in g.edges() {
        *counts.entry(e).or_insert(0) += 1;
    }
    for &e in h.edges() {
        *counts.entry(e).or_insert(0) -= 1;
    }
    counts.values().map(|&c| c.unsigned_abs() as usize).sum()
}

/// Damage mu inflicts on a colored multigraph: multiset symdiff between
/// the graph and its relabeling.
pub fn colored_symdiff(m: &ColoredMultiGraph, mu: &Permutation) -> usize {
    colored_multiset_symdiff(m, &apply_permutation_colored(m, mu))
}

/// Multiset symmetric difference keyed by ordered pair plus color.
pub fn directed_multiset_symdiff(
    g: &DirectedColoredMultiGraph,
    h: &DirectedColoredMultiGraph,
) -> usize {
    assert_eq!(g.n(), h.n(), "graphs must share a vertex count");
    let mut counts: HashMap<(u32, u32, u32), i64> = HashMap::new();
    for &a in g.arcs() {
        *counts.entry(a).or_insert(0) += 1;
    }
    for &a in h.arcs() {
        *counts.entry(a).or_insert(0) -= 1;
    }
    counts.values().map(|&c| c.unsigned_abs() as usize).sum()
}

/// Damage mu inflicts on a directed colored multigraph.
pub fn directed_colored_symdiff(d: &DirectedColoredMultiGraph, mu: &Permutation) -> usize {
    directed_multiset_symdiff(d, &apply_permutation_directed(d, mu))
}
