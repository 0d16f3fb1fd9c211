use rso_graph::Graph;

use crate::error::AssemblyError;

/// Vertex id of the pair (word x, position i), i in 0..lh: words are
/// laid out consecutively, positions inside a word.
pub fn pf_id(lh: usize, x: u64, i: usize) -> u32 {
    debug_assert!(i < lh && (x >> lh) == 0);
    (x * lh as u64 + i as u64 + 1) as u32
}

pub fn pf_of(lh: usize, id: u32) -> (u64, usize) {
    let z = id as u64 - 1;
    (z / lh as u64, (z % lh as u64) as usize)
}

/// Degree-reduced hypercube: one lh-cycle of positions per binary word,
/// plus an edge from (x, i) to (x with bit i flipped, i). Every vertex
/// has degree 3 (degree 1 at lh = 1, where the cycle degenerates away).
/// Routing between any two vertices takes at most 3*lh steps: walk the
/// position cycle once, flipping the bits where the words differ, then
/// walk on to the target position.
pub fn path_finder_graph(lh: usize) -> Result<Graph, AssemblyError> {
    if lh == 0 || lh > 16 {
        return Err(AssemblyError::BadParams(format!(
            "position count {lh} outside 1..=16"
        )));
    }
    let n = lh << lh;
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for x in 0..1u64 << lh {
        for i in 0..lh {
            let here = pf_id(lh, x, i);
            if lh > 1 {
                let next = pf_id(lh, x, (i + 1) % lh);
                edges.push((here.min(next), here.max(next)));
            }
            let flip = pf_id(lh, x ^ (1 << i), i);
            edges.push((here.min(flip), here.max(flip)));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Ok(Graph::from_edges(n, edges)?)
}

/// A concrete route from u to v of length at most 3*lh, as a vertex
/// path (consecutive entries adjacent, endpoints u and v).
pub fn find_path(lh: usize, u: u32, v: u32) -> Vec<u32> {
    let (mut x, mut pos) = pf_of(lh, u);
    let (y, target_pos) = pf_of(lh, v);
    let mut path = vec![u];
    if x != y {
        // One sweep over all positions, flipping each differing bit as
        // its position comes up.
        for step in 0..lh {
            let p = (pos + step) % lh;
            if step > 0 {
                path.push(pf_id(lh, x, p));
            }
            if (x ^ y) >> p & 1 == 1 {
                x ^= 1 << p;
                path.push(pf_id(lh, x, p));
            }
        }
        pos = (pos + lh - 1) % lh;
    }
    while pos != target_pos {
        pos = (pos + 1) % lh;
        path.push(pf_id(lh, x, pos));
    }
    path
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_a_bijection() {
        for lh in [1usize, 2, 3, 5] {
            for id in 1..=(lh << lh) as u32 {
                let (x, i) = pf_of(lh, id);
                assert_eq!(pf_id(lh, x, i), id);
            }
        }
    }

    #[test]
    fn every_route_replays_at_lh_2() {
        let g = path_finder_graph(2).unwrap();
        for u in 1..=8u32 {
            for v in 1..=8u32 {
                let path = find_path(2, u, v);
                assert_eq!((path[0], *path.last().unwrap()), (u, v));
                assert!(path.len() <= 3 * 2 + 1);
                for w in path.windows(2) {
                    assert!(g.has_edge(w[0], w[1]), "{} -- {} missing", w[0], w[1]);
                }
            }
        }
    }
}
