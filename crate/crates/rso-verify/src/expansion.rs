use num_rational::Ratio;
use rand::RngCore;

use rso_graph::Graph;
use rso_perms::seeded::{rand_below, random_subset, rng_from_seed};

use crate::report::{ExpansionMode, ExpansionReport, VerifyError};

/// Exact vertex expansion: minimum over non-empty S with |S| <= n/2 of
/// |N(S) \ S| / |S|. Full subset scan, so n is capped; ratios compared
/// by cross-multiplication to keep the inner loop allocation-free.
pub fn expansion_combinatorial(g: &Graph, n_limit: usize) -> Result<ExpansionReport, VerifyError> {
    let n = g.n();
    if n > n_limit || n > 63 {
        return Err(VerifyError::TooLarge { n, limit: n_limit.min(63) });
    }
    if n < 2 {
        return Err(VerifyError::Degenerate(format!("expansion needs n >= 2, got {n}")));
    }
    let adj = g.adjacency_masks();
    let cap = n / 2;
    // best = (boundary, size, subset mask), minimized as a fraction with
    // ties broken toward the numerically smallest mask.
    let mut best: Option<(u64, u64, u64)> = None;
    let mut stack: Vec<(usize, u32, u64, u64)> = vec![(0, 0, 0, 0)];
    while let Some((v, size, set, nbr)) = stack.pop() {
        if v == n {
            continue;
        }
        // exclude v
        stack.push((v + 1, size, set, nbr));
        // include v
        if (size as usize) < cap {
            let set2 = set | 1 << v;
            let nbr2 = nbr | adj[v];
            let out = (nbr2 & !set2).count_ones() as u64;
            let sz = size as u64 + 1;
            let better = match best {
                None => true,
                Some((bo, bs, bm)) => {
                    let lhs = out * bs;
                    let rhs = bo * sz;
                    lhs < rhs || (lhs == rhs && set2 < bm)
                }
            };
            if better {
                best = Some((out, sz, set2));
            }
            stack.push((v + 1, size + 1, set2, nbr2));
        }
    }
    let (out, sz, mask) = best.expect("n >= 2 admits a singleton subset");
    Ok(ExpansionReport {
        gamma_combinatorial: Some(Ratio::new(out as i64, sz as i64)),
        gamma_upper: Some(Ratio::new(out as i64, sz as i64)),
        lambda2: None,
        mode: ExpansionMode::Exact,
        witness: Some((0..n).filter(|&v| mask >> v & 1 == 1).map(|v| v as u32 + 1).collect()),
        seed: None,
    })
}

fn ratio_of(g: &Graph, subset: &[u32]) -> Ratio<i64> {
    let inside: std::collections::HashSet<u32> = subset.iter().copied().collect();
    let mut outside = std::collections::HashSet::new();
    for &v in subset {
        for w in g.neighbors(v) {
            if !inside.contains(&w) {
                outside.insert(w);
            }
        }
    }
    Ratio::new(outside.len() as i64, subset.len() as i64)
}

/// Upper bound on expansion from a cut search: all singletons, seeded
/// random subsets, and seeded BFS-grown sets evaluated at every size up
/// to n/2. Works at any n; finds bottlenecks, proves nothing below them.
pub fn expansion_sampled(g: &Graph, samples: u64, seed: u64) -> Result<ExpansionReport, VerifyError> {
    let n = g.n();
    if n < 2 {
        return Err(VerifyError::Degenerate(format!("expansion needs n >= 2, got {n}")));
    }
    let cap = n / 2;
    let mut best: Option<(Ratio<i64>, Vec<u32>)> = None;
    let mut offer = |r: Ratio<i64>, s: Vec<u32>| {
        let better = match &best {
            None => true,
            Some((br, bs)) => r < *br || (r == *br && s < *bs),
        };
        if better {
            best = Some((r, s));
        }
    };
    for v in 1..=n as u32 {
        offer(ratio_of(g, &[v]), vec![v]);
    }
    let mut rng = rng_from_seed(seed);
    for round in 0..samples {
        if round % 2 == 0 {
            let k = 1 + rand_below(&mut rng, cap as u64) as usize;
            let s = random_subset(&mut rng, n, k);
            offer(ratio_of(g, &s), s);
        } else {
            // Randomized BFS growth from a random start; every prefix
            // size is a candidate cut.
            let start = 1 + rand_below(&mut rng, n as u64) as u32;
            let mut in_set = vec![false; n + 1];
            let mut set: Vec<u32> = vec![start];
            in_set[start as usize] = true;
            let mut frontier: Vec<u32> = g.neighbors(start);
            while set.len() < cap && !frontier.is_empty() {
                let pick = rand_below(&mut rng, frontier.len() as u64) as usize;
                let v = frontier.swap_remove(pick);
                if in_set[v as usize] {
                    continue;
                }
                in_set[v as usize] = true;
                set.push(v);
                for w in g.neighbors(v) {
                    if !in_set[w as usize] {
                        frontier.push(w);
                    }
                }
                let mut sorted = set.clone();
                sorted.sort_unstable();
                offer(ratio_of(g, &sorted), sorted);
            }
        }
    }
    let (gamma, witness) = best.expect("singleton candidates always exist");
    Ok(ExpansionReport {
        gamma_combinatorial: None,
        gamma_upper: Some(gamma),
        lambda2: None,
        mode: ExpansionMode::Sampled,
        witness: Some(witness),
        seed: Some(seed),
    })
}

/// Second-largest adjacency eigenvalue magnitude by power iteration with
/// one deflation step. Seeded start vectors make the estimate
/// reproducible; accuracy grows with `iterations`.
pub fn expansion_spectral(
    g: &Graph,
    iterations: usize,
    seed: u64,
) -> Result<ExpansionReport, VerifyError> {
    let n = g.n();
    if n < 2 {
        return Err(VerifyError::Degenerate(format!("spectral estimate needs n >= 2, got {n}")));
    }
    let mut rng = rng_from_seed(seed);
    let mut unit_random = |n: usize| -> Vec<f64> {
        let v: Vec<f64> = (0..n)
            .map(|_| (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64 - 0.5)
            .collect();
        normalize(v)
    };
    let mul = |x: &[f64]| -> Vec<f64> {
        let mut y = vec![0.0; n];
        for (u, nbrs) in g.adjacency().iter().enumerate() {
            for &w in nbrs {
                y[u] += x[w as usize - 1];
            }
        }
        y
    };

    let mut v1 = unit_random(n);
    for _ in 0..iterations.max(1) {
        let y = mul(&v1);
        if norm(&y) == 0.0 {
            break;
        }
        v1 = normalize(y);
    }

    // Second eigenpair: iterate in the orthogonal complement of v1,
    // re-projecting every step so rounding never drifts back.
    let mut v2 = unit_random(n);
    v2 = orthogonalize(v2, &v1);
    let mut lambda2 = 0.0;
    for _ in 0..iterations.max(1) {
        let y = mul(&v2);
        let y = orthogonalize(y, &v1);
        lambda2 = dot(&v2, &y);
        if norm(&y) == 0.0 {
            break;
        }
        v2 = normalize(y);
    }
    Ok(ExpansionReport {
        gamma_combinatorial: None,
        gamma_upper: None,
        lambda2: Some(lambda2.abs()),
        mode: ExpansionMode::Spectral,
        witness: None,
        seed: Some(seed),
    })
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

fn normalize(a: Vec<f64>) -> Vec<f64> {
    let m = norm(&a);
    if m == 0.0 {
        a
    } else {
        a.into_iter().map(|x| x / m).collect()
    }
}

fn orthogonalize(mut a: Vec<f64>, against: &[f64]) -> Vec<f64> {
    let c = dot(&a, against);
    for (x, y) in a.iter_mut().zip(against) {
        *x -= c * y;
    }
    a
}
