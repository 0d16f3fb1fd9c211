use rso_graph::Graph;
use rso_perms::seeded::{coin, rng_from_seed};
use rso_transform::disjoint_union_with_cross;
use rso_verify::TwoSourceFunction;

use crate::error::DenseError;

/// Erdos-Renyi graph at edge probability 1/2: each pair gets a seeded
/// fair coin, pairs drawn in lexicographic order.
pub fn random_dense(n: usize, seed: u64) -> Graph {
    let mut rng = rng_from_seed(seed);
    let mut edges = Vec::new();
    for u in 1..=n as u32 {
        for v in u + 1..=n as u32 {
            if coin(&mut rng) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("pairs drawn from 1..=n")
}

/// Two sides of N vertices each: a clique side 1..=N and a plain side
/// N+1..=2N, joined by an edge (i, N+j) wherever the table holds at
/// (i, j). The clique keeps the sides apart by degree: side one sits at
/// N-1 plus its row weight, side two at its column weight alone, so a
/// balanced table leaves a gap of about (1 - 2 eps) * N.
pub fn nme_graph(f: &TwoSourceFunction) -> Result<Graph, DenseError> {
    if f.rows() != f.cols() {
        return Err(DenseError::BadParams(format!(
            "the two sides mirror a square table, got {}x{}",
            f.rows(),
            f.cols()
        )));
    }
    let n = f.rows() as u32;
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            edges.push((i, j));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            if f.value(i as usize, j as usize) {
                edges.push((i, n + j));
            }
        }
    }
    Ok(Graph::from_edges(2 * n as usize, edges).expect("labels stay within 2N"))
}

/// Three-block graph: two table-mirror sides of equal size plus a larger
/// clique block. Block A (plain) and block B (clique) are wired by `f`
/// with B's index as the row; the bipartite predicate `b` wires both A
/// and B to block C (clique) by its own row index. Block degrees then
/// separate as A < B < C, which is what the ordering procedures key on.
pub fn tri_graph(f: &TwoSourceFunction, b: &TwoSourceFunction) -> Result<Graph, DenseError> {
    if f.rows() != f.cols() {
        return Err(DenseError::BadParams(format!(
            "blocks A and B mirror a square table, got {}x{}",
            f.rows(),
            f.cols()
        )));
    }
    if b.rows() != f.rows() {
        return Err(DenseError::BadParams(format!(
            "the bipartite predicate must index blocks A and B by its rows: {} rows vs side {}",
            b.rows(),
            f.rows()
        )));
    }
    let na = f.rows() as u32;
    let nc = b.cols() as u32;
    let base_b = na;
    let base_c = 2 * na;
    let mut edges = Vec::new();
    for i in 1..=na {
        for j in 1..=na {
            if f.value(i as usize, j as usize) {
                edges.push((base_b + i, j));
            }
        }
        for j in i + 1..=na {
            edges.push((base_b + i, base_b + j));
        }
    }
    for i in 1..=na {
        for j in 1..=nc {
            if b.value(i as usize, j as usize) {
                edges.push((i, base_c + j));
                edges.push((base_b + i, base_c + j));
            }
        }
    }
    for i in 1..=nc {
        for j in i + 1..=nc {
            edges.push((base_c + i, base_c + j));
        }
    }
    Ok(Graph::from_edges((2 * na + nc) as usize, edges).expect("labels stay within the blocks"))
}

/// Disjoint union plus arbitrary cross edges, accepted only when the
/// sides stay separated by degree in the result: every left vertex must
/// end up strictly below every right vertex. Cross pairs are given as
/// (left label, right label) in each side's own numbering.
pub fn combine_dense(
    g1: &Graph,
    g2: &Graph,
    cross: &[(u32, u32)],
) -> Result<Graph, DenseError> {
    if g1.n() == 0 || g2.n() == 0 {
        return Err(DenseError::BadParams("both sides must be nonempty".into()));
    }
    let combined = disjoint_union_with_cross(g1, g2, cross)?;
    let degrees = combined.degrees();
    let left_max = degrees[..g1.n()].iter().max().copied().unwrap_or(0);
    let right_min = degrees[g1.n()..].iter().min().copied().unwrap_or(0);
    if left_max >= right_min {
        return Err(DenseError::BadParams(format!(
            "no degree gap between the sides: left max {left_max}, right min {right_min}"
        )));
    }
    Ok(combined)
}
