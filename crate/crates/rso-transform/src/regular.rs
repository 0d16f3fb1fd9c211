use rso_graph::{ColoredMultiGraph, Graph};

use crate::error::TransformError;

/// Pad a graph up to exact d_target-regularity while superimposing an
/// expander: the original edges keep color 1, the expander's edges and
/// all padding take color 2. Padding is deterministic: repeatedly wire
/// together the two vertices with the largest remaining deficit (ties
/// to the smaller id), and when a single deficient vertex remains give
/// it self-loops, two degrees apiece. Parallel padding edges are
/// accepted; a later eligibility pass separates their colors.
///
/// The color-1 subgraph of the output is exactly the input, so any
/// structure certified on it survives the padding.
pub fn make_regular_expanding(
    g: &Graph,
    d_target: usize,
    expander: &Graph,
) -> Result<ColoredMultiGraph, TransformError> {
    if expander.n() != g.n() {
        return Err(TransformError::SizeMismatch { expected: g.n(), got: expander.n() });
    }
    let need = g.max_degree() + expander.max_degree();
    if d_target < need {
        return Err(TransformError::TargetTooSmall { d_target, need });
    }
    if g.n() * d_target % 2 == 1 {
        return Err(TransformError::OddTotalDegree { n: g.n(), d_target });
    }

    let mut edges: Vec<(u32, u32, u32)> =
        g.edges().iter().map(|&(u, v)| (u, v, 1)).collect();
    edges.extend(expander.edges().iter().map(|&(u, v)| (u, v, 2)));

    let mut deficit: Vec<usize> = vec![d_target; g.n()];
    for &(u, v, _) in &edges {
        deficit[u as usize - 1] -= 1;
        deficit[v as usize - 1] -= 1;
    }
    loop {
        let mut open: Vec<(usize, u32)> = deficit
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d > 0)
            .map(|(i, &d)| (d, i as u32 + 1))
            .collect();
        if open.is_empty() {
            break;
        }
        open.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        if open.len() == 1 {
            let (def, v) = open[0];
            // Total deficit is even throughout (n*d_target is even and
            // every step removes two), so a lone remainder is even.
            assert!(def % 2 == 0, "odd lone deficit despite even total");
            for _ in 0..def / 2 {
                edges.push((v, v, 2));
            }
            deficit[v as usize - 1] = 0;
        } else {
            let (_, a) = open[0];
            let (_, b) = open[1];
            edges.push((a.min(b), a.max(b), 2));
            deficit[a as usize - 1] -= 1;
            deficit[b as usize - 1] -= 1;
        }
    }
    Ok(ColoredMultiGraph::from_edges(g.n(), edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lone_vertex_gets_loops() {
        let g = Graph::empty(1);
        let out = make_regular_expanding(&g, 4, &Graph::empty(1)).unwrap();
        assert_eq!(out.edges(), &[(1, 1, 2), (1, 1, 2)]);
        assert_eq!(out.degree(1), 4);
    }
}
