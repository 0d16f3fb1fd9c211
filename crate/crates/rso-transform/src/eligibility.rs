use rso_graph::ColoredMultiGraph;

use crate::error::TransformError;

/// Normalize a colored multigraph of max degree d and colors in 1..=c
/// into the "eligible" form the gadget replacement consumes: parallel
/// edges are recolored apart and every vertex gains a fresh self-loop.
///
/// The i-th edge of each parallel class (input order, 1-based) takes
/// color (i-1)*d + its old color, so the first copy keeps its color and
/// later copies land in higher bands. The appended self-loops all take
/// color d*c + 1, one band above anything the recoloring can produce
/// when colors stay within 1..=d's band structure.
///
/// Not idempotent: an already-eligible input gains one more loop per
/// vertex. Callers that need a single loop must pass the raw graph.
pub fn eligibility_pass(
    m: &ColoredMultiGraph,
    d: usize,
    c: u32,
) -> Result<ColoredMultiGraph, TransformError> {
    for (v, deg) in m.degrees().iter().enumerate() {
        if *deg > d {
            return Err(TransformError::DegreeTooHigh {
                v: v as u32 + 1,
                degree: *deg,
                limit: d,
            });
        }
    }
    for &(_, _, color) in m.edges() {
        if color == 0 {
            return Err(TransformError::Ineligible(
                "color 0 is the non-edge marker and cannot be recolored".into(),
            ));
        }
        if color > c {
            return Err(TransformError::ColorTooHigh { color, limit: c });
        }
    }

    let mut recolored = m.edges().to_vec();
    for positions in m.parallel_classes().values() {
        for (i, &idx) in positions.iter().enumerate() {
            recolored[idx].2 += i as u32 * d as u32;
        }
    }
    let loop_color = d as u32 * c + 1;
    let mut edges = recolored;
    for v in 1..=m.n() as u32 {
        edges.push((v, v, loop_color));
    }
    let out = ColoredMultiGraph::from_edges(m.n(), edges)?;

    // The band argument above fails in corners (one parallel class can
    // wrap into another band when c > d, and heavy loop classes can
    // reach the loop color). Refuse rather than emit an ineligible graph.
    if !out.is_eligible() {
        for ((u, v), positions) in out.parallel_classes() {
            let mut seen = Vec::new();
            for &idx in &positions {
                let color = out.edges()[idx].2;
                if seen.contains(&color) {
                    return Err(TransformError::ColorCollision { u, v, color });
                }
                seen.push(color);
            }
        }
        unreachable!("recolored graph failed eligibility without a collision");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loop_color_sits_above_the_bands() {
        let m = ColoredMultiGraph::from_edges(2, [(1, 2, 1)]).unwrap();
        let out = eligibility_pass(&m, 3, 2).unwrap();
        assert_eq!(out.edges(), &[(1, 2, 1), (1, 1, 7), (2, 2, 7)]);
    }

    #[test]
    fn degree_cap_names_the_vertex() {
        let m = ColoredMultiGraph::from_edges(2, [(1, 2, 1), (1, 2, 2), (1, 1, 1)]).unwrap();
        let err = eligibility_pass(&m, 3, 2).unwrap_err();
        assert!(err.to_string().contains("vertex 1"), "{err}");
    }
}
