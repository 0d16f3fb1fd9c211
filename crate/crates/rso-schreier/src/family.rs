use serde::{Deserialize, Serialize};

use rso_graph::{ColoredMultiGraph, DirectedColoredMultiGraph, Permutation};

use crate::error::SchreierError;

/// A list of d permutations acting on the same point set [n]. The
/// action is the whole input of the Schreier construction: the primary
/// graph draws one colored arc per (point, permutation) and the
/// secondary graph tracks how ordered pairs of distinct points travel.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermutationFamily {
    perms: Vec<Permutation>,
}

impl PermutationFamily {
    pub fn new(perms: Vec<Permutation>) -> Result<PermutationFamily, SchreierError> {
        let Some(first) = perms.first() else {
            return Err(SchreierError::EmptyFamily);
        };
        let n = first.n();
        for (index, p) in perms.iter().enumerate() {
            if p.n() != n {
                return Err(SchreierError::MixedDegrees { index, expected: n, got: p.n() });
            }
        }
        Ok(PermutationFamily { perms })
    }

    /// Number of points acted on.
    pub fn n(&self) -> usize {
        self.perms[0].n()
    }

    /// Number of permutations (the color count of the primary graph).
    pub fn d(&self) -> usize {
        self.perms.len()
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }
}

/// Id of the ordered pair (u, v), u != v, in 1..=n(n-1): pairs are laid
/// out u-major with v skipping u.
pub fn pair_id(n: usize, u: u32, v: u32) -> u32 {
    debug_assert!(u != v && u >= 1 && v >= 1 && u as usize <= n && v as usize <= n);
    (u - 1) * (n as u32 - 1) + if v < u { v } else { v - 1 }
}

/// Inverse of pair_id.
pub fn pair_of(n: usize, id: u32) -> (u32, u32) {
    let width = n as u32 - 1;
    let u = (id - 1) / width + 1;
    let r = (id - 1) % width + 1;
    (u, if r < u { r } else { r + 1 })
}

/// One arc v -> pi_i(v) colored i for every point and permutation, so
/// each vertex has out-degree exactly one in every color. Robustness of
/// this graph (in the directed colored sense) is what the sufficient
/// condition certifies.
pub fn primary_graph(family: &PermutationFamily) -> DirectedColoredMultiGraph {
    let n = family.n();
    let mut arcs = Vec::with_capacity(n * family.d());
    for (i, p) in family.perms().iter().enumerate() {
        for v in 1..=n as u32 {
            arcs.push((v, p.apply(v), i as u32 + 1));
        }
    }
    DirectedColoredMultiGraph::from_arcs(n, arcs).expect("arcs stay in range")
}

/// The pair action: vertex set all ordered pairs of distinct points,
/// one edge {(u,v), (pi_i(u), pi_i(v))} per pair and permutation, all
/// colored 1 (the construction uses it uncolored). Kept as a multiset:
/// d * n(n-1) edge slots, with self-loops where a permutation fixes a
/// pair and parallels where two permutations agree.
pub fn secondary_graph(family: &PermutationFamily) -> ColoredMultiGraph {
    let n = family.n();
    let mut edges = Vec::with_capacity(n * (n - 1) * family.d());
    for p in family.perms() {
        for u in 1..=n as u32 {
            for v in 1..=n as u32 {
                if u != v {
                    edges.push((pair_id(n, u, v), pair_id(n, p.apply(u), p.apply(v)), 1));
                }
            }
        }
    }
    ColoredMultiGraph::from_edges(n * (n - 1), edges).expect("pair ids stay in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_ids_are_a_bijection() {
        for n in [2usize, 3, 5, 8] {
            let mut seen = vec![false; n * (n - 1)];
            for u in 1..=n as u32 {
                for v in 1..=n as u32 {
                    if u != v {
                        let id = pair_id(n, u, v);
                        assert_eq!(pair_of(n, id), (u, v));
                        assert!(!seen[id as usize - 1]);
                        seen[id as usize - 1] = true;
                    }
                }
            }
            assert!(seen.iter().all(|&s| s));
        }
    }
}
