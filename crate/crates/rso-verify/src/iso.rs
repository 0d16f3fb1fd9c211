use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use rso_graph::{apply_permutation, symdiff, Graph, Permutation};
use rso_perms::seeded::{random_permutation, rng_from_seed};

use crate::report::VerifyError;
use crate::scan::min_scan;

/// Lexicographically smallest mu with mu(g) = h, by backtracking with
/// degree pruning. None when the graphs are not isomorphic.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Permutation> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    let n = g.n();
    assert!(n <= 64, "isomorphism search is for desk-scale graphs");
    if n == 0 {
        return Some(Permutation::identity(0));
    }
    let dg = g.degrees();
    let dh = h.degrees();
    {
        let mut a = dg.clone();
        let mut b = dh.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return None;
        }
    }
    let ag = g.adjacency_masks();
    let ah = h.adjacency_masks();
    let mut images: Vec<u32> = Vec::with_capacity(n);
    let mut used: u64 = 0;
    if map_search(n, &dg, &dh, &ag, &ah, &mut images, &mut used) {
        Some(Permutation::from_images(images).expect("backtracking assigns a bijection"))
    } else {
        None
    }
}

fn map_search(
    n: usize,
    dg: &[usize],
    dh: &[usize],
    ag: &[u64],
    ah: &[u64],
    images: &mut Vec<u32>,
    used: &mut u64,
) -> bool {
    let v = images.len();
    if v == n {
        return true;
    }
    for w in 1..=n as u32 {
        let bit = 1u64 << (w - 1);
        if *used & bit != 0 || dg[v] != dh[w as usize - 1] {
            continue;
        }
        let ok = (0..v).all(|u| {
            let before = ag[v] >> u & 1;
            let after = ah[w as usize - 1] >> (images[u] - 1) & 1;
            before == after
        });
        if !ok {
            continue;
        }
        *used |= bit;
        images.push(w);
        if map_search(n, dg, dh, ag, ah, images, used) {
            return true;
        }
        images.pop();
        *used &= !bit;
    }
    false
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FarMode {
    Exact,
    Sampled { samples: u64, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FarReport {
    /// min over bijections phi of |E(g) symdiff phi(E(h))|; exact or a
    /// witnessed upper bound depending on mode.
    pub distance: usize,
    pub witness: Permutation,
    pub exact: bool,
    pub bijections_examined: u64,
    pub seed: Option<u64>,
}

pub const FAR_EXACT_LIMIT: usize = 9;

/// Distance from isomorphism: how many edge edits remain under the best
/// vertex identification of h with g. Exact mode scans all n!
/// bijections; sampled mode polishes seeded random bijections by
/// steepest-descent transpositions and reports the best local minimum.
pub fn far_from_isomorphic(g: &Graph, h: &Graph, mode: FarMode) -> Result<FarReport, VerifyError> {
    if g.n() != h.n() {
        return Err(VerifyError::Degenerate(format!(
            "vertex counts differ: {} vs {}",
            g.n(),
            h.n()
        )));
    }
    let n = g.n();
    match mode {
        FarMode::Exact => {
            if n > FAR_EXACT_LIMIT {
                return Err(VerifyError::TooLarge { n, limit: FAR_EXACT_LIMIT });
            }
            if n == 0 {
                return Ok(FarReport {
                    distance: 0,
                    witness: Permutation::identity(0),
                    exact: true,
                    bijections_examined: 1,
                    seed: None,
                });
            }
            let key = |im: &[u32]| -> Option<Ratio<i64>> {
                let phi = Permutation::from_images(im.to_vec()).expect("scan yields bijections");
                Some(Ratio::from_integer(symdiff(g, &apply_permutation(h, &phi)) as i64))
            };
            let (found, examined) = min_scan(n, 1, &key);
            let (d, witness) = found.expect("n >= 1 has at least the identity bijection");
            Ok(FarReport {
                distance: d.to_integer() as usize,
                witness,
                exact: true,
                bijections_examined: examined,
                seed: None,
            })
        }
        FarMode::Sampled { samples, seed } => {
            let mut rng = rng_from_seed(seed);
            let mut best: Option<(usize, Permutation)> = None;
            let mut examined = 0u64;
            for _ in 0..samples.max(1) {
                let mut phi = random_permutation(&mut rng, n);
                let mut d = symdiff(g, &apply_permutation(h, &phi));
                examined += 1;
                // Steepest-descent over single swaps of two images.
                loop {
                    let mut improved: Option<(usize, Permutation)> = None;
                    for a in 0..n {
                        for b in a + 1..n {
                            let mut im = phi.images().to_vec();
                            im.swap(a, b);
                            let cand =
                                Permutation::from_images(im).expect("swap keeps a bijection");
                            let cd = symdiff(g, &apply_permutation(h, &cand));
                            examined += 1;
                            let better = match &improved {
                                None => cd < d,
                                Some((bd, bw)) => {
                                    cd < *bd || (cd == *bd && cand.images() < bw.images())
                                }
                            };
                            if better {
                                improved = Some((cd, cand));
                            }
                        }
                    }
                    match improved {
                        Some((nd, np)) => {
                            d = nd;
                            phi = np;
                        }
                        None => break,
                    }
                }
                let better = match &best {
                    None => true,
                    Some((bd, bw)) => d < *bd || (d == *bd && phi.images() < bw.images()),
                };
                if better {
                    best = Some((d, phi));
                }
            }
            let (distance, witness) = best.expect("at least one sample runs");
            Ok(FarReport {
                distance,
                witness,
                exact: false,
                bijections_examined: examined,
                seed: Some(seed),
            })
        }
    }
}
