use rso_graph::{ColoredMultiGraph, DirectedColoredMultiGraph};

use crate::error::TransformError;

/// Forget arc directions without losing them: arc j-th in input order
/// from u to v colored c becomes a fresh auxiliary vertex a = n+j with
/// edges {u,a} colored 2c-1 and {a,v} colored 2c. The odd/even color
/// split remembers which side was the tail, so the directed structure
/// is recoverable and a relabeling of the output can only cheat by
/// moving auxiliary vertices, which costs it their colored incidences.
///
/// Requires at least 3 incident arcs per vertex (so original vertices
/// and auxiliaries stay distinguishable by degree) and no two arcs with
/// equal endpoints and color.
pub fn directed_to_undirected(
    d: &DirectedColoredMultiGraph,
) -> Result<ColoredMultiGraph, TransformError> {
    for (i, &count) in d.incident_arc_counts().iter().enumerate() {
        if count < 3 {
            return Err(TransformError::TooFewArcs { v: i as u32 + 1, count });
        }
    }
    if d.has_duplicate_arc() {
        return Err(TransformError::DuplicateArc);
    }
    if d.arcs().iter().any(|&(_, _, c)| c == 0) {
        return Err(TransformError::Ineligible("arcs must carry colors >= 1".into()));
    }

    let n = d.n();
    let mut edges = Vec::with_capacity(2 * d.arc_count());
    for (j, &(u, v, c)) in d.arcs().iter().enumerate() {
        let a = (n + j + 1) as u32;
        edges.push((u, a, 2 * c - 1));
        edges.push((a, v, 2 * c));
    }
    Ok(ColoredMultiGraph::from_edges(n + d.arc_count(), edges)?)
}
