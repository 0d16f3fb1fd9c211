use rso_graph::{ColoredMultiGraph, Graph};

use crate::error::TransformError;

/// Bounded-degree form of a dense graph: vertex v becomes the cloud
/// {<v,u>: u != v} of n-1 vertices, wired internally by the supplied
/// expander (colored 1). Every pair u < v contributes one cross edge
/// <v,u> -- <u,v>, colored 2 when {u,v} is an edge of g and colored 0
/// when it is not, so the original adjacency matrix is written into the
/// cross-edge colors rather than into the topology.
///
/// Cloud vertex <v,u> gets id (v-1)(n-1) + rank of u in [n] minus v.
/// Output degree is bounded by the expander's max degree plus one.
pub fn degree_reduce_dense(
    g: &Graph,
    expander: &Graph,
) -> Result<ColoredMultiGraph, TransformError> {
    let n = g.n();
    if n < 3 {
        return Err(TransformError::TooSmall { n, need: 3 });
    }
    if expander.n() != n - 1 {
        return Err(TransformError::SizeMismatch { expected: n - 1, got: expander.n() });
    }

    let width = n as u32 - 1;
    let id = |v: u32, u: u32| (v - 1) * width + if u < v { u } else { u - 1 };
    let mut edges: Vec<(u32, u32, u32)> = Vec::new();
    for v in 1..=n as u32 {
        // expander vertex i stands for the i-th element of [n] minus v
        let lift = |i: u32| if i < v { i } else { i + 1 };
        for &(a, b) in expander.edges() {
            edges.push((id(v, lift(a)), id(v, lift(b)), 1));
        }
    }
    for u in 1..=n as u32 {
        for v in u + 1..=n as u32 {
            let color = if g.has_edge(u, v) { 2 } else { 0 };
            edges.push((id(v, u), id(u, v), color));
        }
    }
    Ok(ColoredMultiGraph::from_edges(n * (n - 1), edges)?)
}
