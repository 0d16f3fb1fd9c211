use rso_graph::{ColoredMultiGraph, Graph, GraphError};

use crate::error::TransformError;

/// Edge-set union of two graphs on the same vertex set; shared edges
/// collapse. A sparse graph superimposed on a robust one degrades the
/// guarantee by at most its max degree, which makes this the standard
/// way to graft extra structure onto a certified base.
pub fn superimpose(g: &Graph, h: &Graph) -> Result<Graph, TransformError> {
    if h.n() != g.n() {
        return Err(TransformError::SizeMismatch { expected: g.n(), got: h.n() });
    }
    let mut edges: Vec<(u32, u32)> = g.edges().to_vec();
    edges.extend(h.edges());
    edges.sort_unstable();
    edges.dedup();
    Ok(Graph::from_edges(g.n(), edges)?)
}

/// Place g and h side by side (h's vertices shifted up by g's count)
/// and add the given cross edges, each pair (a, b) read as a in g and
/// b in h. Rejects cross endpoints outside their side; duplicate cross
/// pairs surface as the underlying duplicate-edge error.
pub fn disjoint_union_with_cross(
    g: &Graph,
    h: &Graph,
    cross: &[(u32, u32)],
) -> Result<Graph, TransformError> {
    let shift = g.n() as u32;
    let mut edges: Vec<(u32, u32)> = g.edges().to_vec();
    edges.extend(h.edges().iter().map(|&(u, v)| (u + shift, v + shift)));
    for &(a, b) in cross {
        if a == 0 || a as usize > g.n() {
            return Err(GraphError::VertexOutOfRange { v: a, n: g.n() }.into());
        }
        if b == 0 || b as usize > h.n() {
            return Err(GraphError::VertexOutOfRange { v: b, n: h.n() }.into());
        }
        edges.push((a, b + shift));
    }
    Ok(Graph::from_edges(g.n() + h.n(), edges)?)
}

/// Renumber the colors in use densely as 1..=t, preserving their order.
/// Returns the compacted graph and the old palette: entry i-1 is the
/// original color now called i. Color 0 stays 0, it marks non-edges and
/// must not be promoted to a real color.
pub fn compact_colors(m: &ColoredMultiGraph) -> (ColoredMultiGraph, Vec<u32>) {
    let palette: Vec<u32> = m.colors().into_iter().filter(|&c| c != 0).collect();
    let out = m.recolored(|c| {
        if c == 0 {
            0
        } else {
            palette.binary_search(&c).expect("palette covers every color") as u32 + 1
        }
    });
    (out, palette)
}
