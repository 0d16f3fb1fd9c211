use num_rational::Ratio;
use rand_chacha::ChaCha8Rng;

use rso_graph::{ColoredMultiGraph, Graph};
use rso_perms::seeded::{coin, rand_below, random_permutation, rng_from_seed};
use rso_verify::{is_self_ordered, robustness_adversarial, robustness_exact, RobustnessReport, EXACT_SCAN_LIMIT};

use crate::error::AssemblyError;

const CERTIFY_SAMPLES: u64 = 20_000;

/// Two disjoint m-cycles joined by d' seeded perfect matchings. Cycle
/// edges carry colors 1 and 2 (one per cycle), matching j carries color
/// j + 2, so every vertex sees d' + 2 colored edge slots: its two cycle
/// edges plus one per matching.
pub fn two_cycle_matching_graph(
    m: usize,
    d_prime: usize,
    seed: u64,
) -> Result<ColoredMultiGraph, AssemblyError> {
    if m < 3 {
        return Err(AssemblyError::BadParams(format!(
            "a cycle needs at least 3 vertices, got {m}"
        )));
    }
    let mut edges: Vec<(u32, u32, u32)> = Vec::with_capacity(2 * m + d_prime * m);
    let shift = m as u32;
    for v in 1..m as u32 {
        edges.push((v, v + 1, 1));
        edges.push((shift + v, shift + v + 1, 2));
    }
    edges.push((1, shift, 1));
    edges.push((shift + 1, 2 * shift, 2));
    let mut rng = rng_from_seed(seed);
    for j in 0..d_prime {
        let sigma = random_permutation(&mut rng, m);
        for v in 1..=m as u32 {
            edges.push((v, shift + sigma.apply(v), j as u32 + 3));
        }
    }
    Ok(ColoredMultiGraph::from_edges(2 * m, edges)?)
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=n as u32 {
        for v in u + 1..=n as u32 {
            if coin(rng) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("pairs stay in range")
}

/// Configuration-model draw: pair up d stubs per vertex, reject draws
/// with loops or parallel edges. None on a rejected draw.
fn random_regular(rng: &mut ChaCha8Rng, n: usize, d: usize) -> Option<Graph> {
    let mut stubs: Vec<u32> = (1..=n as u32).flat_map(|v| std::iter::repeat(v).take(d)).collect();
    for i in (1..stubs.len()).rev() {
        let j = rand_below(rng, i as u64 + 1) as usize;
        stubs.swap(i, j);
    }
    let mut edges = Vec::with_capacity(stubs.len() / 2);
    for pair in stubs.chunks(2) {
        let [a, b] = pair else { return None };
        if a == b {
            return None;
        }
        edges.push((*a.min(b), *a.max(b)));
    }
    Graph::from_edges(n, edges).ok()
}

/// Degree-capped random graph: shuffled pair order, coin per pair, a
/// pair is skipped once either endpoint is full.
fn random_capped(rng: &mut ChaCha8Rng, n: usize, cap: usize) -> Graph {
    let mut pairs: Vec<(u32, u32)> = Vec::new();
    for u in 1..=n as u32 {
        for v in u + 1..=n as u32 {
            pairs.push((u, v));
        }
    }
    for i in (1..pairs.len()).rev() {
        let j = rand_below(rng, i as u64 + 1) as usize;
        pairs.swap(i, j);
    }
    let mut deg = vec![0usize; n + 1];
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if deg[u as usize] < cap && deg[v as usize] < cap && coin(rng) {
            deg[u as usize] += 1;
            deg[v as usize] += 1;
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, edges).expect("pairs stay in range")
}

fn certify(g: &Graph, exact: bool, seed: u64) -> Result<Option<RobustnessReport>, AssemblyError> {
    if !is_self_ordered(g) {
        return Ok(None);
    }
    let report = if exact {
        let r = robustness_exact(g, EXACT_SCAN_LIMIT)?;
        if r.gamma_exact.expect("exact scan") <= Ratio::new(0, 1) {
            return Ok(None);
        }
        r
    } else {
        robustness_adversarial(g, &[], CERTIFY_SAMPLES, seed)?
    };
    Ok(Some(report))
}

/// Seeded search for a small robustly self-ordered graph: candidates
/// are d-regular configuration draws when d is given and coin-per-pair
/// random graphs otherwise, certified by an exhaustive automorphism
/// check plus a robustness scan (exact wants ell within the factorial
/// scan limit; otherwise the adversarial estimator records a witnessed
/// upper bound).
pub fn find_rso_small(
    ell: usize,
    d: Option<usize>,
    seed: u64,
    budget: usize,
    exact: bool,
) -> Result<(Graph, RobustnessReport), AssemblyError> {
    let mut rng = rng_from_seed(seed);
    for _ in 0..budget {
        let cand = match d {
            Some(k) => match random_regular(&mut rng, ell, k) {
                Some(g) => g,
                None => continue,
            },
            None => random_graph(&mut rng, ell),
        };
        if let Some(report) = certify(&cand, exact, seed)? {
            return Ok((cand, report));
        }
    }
    Err(AssemblyError::SearchExhausted { what: "a small robustly self-ordered graph", budget })
}

/// Base-graph pair for component assembly: the first graph is connected
/// and asymmetric with maximum degree exactly d', the second is the
/// complement of a degree-capped asymmetric graph, so its minimum
/// degree clears d' + 1 and the two halves of a component stay
/// separable by degree alone.
pub fn find_base_pair(
    ell: usize,
    d_prime: usize,
    seed: u64,
    budget: usize,
) -> Result<(Graph, Graph), AssemblyError> {
    if ell < 2 + d_prime + 2 {
        return Err(AssemblyError::BadParams(format!(
            "no room for a degree gap at {ell} vertices with first-side degree {d_prime}"
        )));
    }
    let mut rng = rng_from_seed(seed);
    let mut g1 = None;
    for _ in 0..budget {
        let cand = random_capped(&mut rng, ell, d_prime);
        if cand.max_degree() == d_prime && cand.is_connected() && is_self_ordered(&cand) {
            g1 = Some(cand);
            break;
        }
    }
    let Some(g1) = g1 else {
        return Err(AssemblyError::SearchExhausted { what: "a sparse connected base graph", budget });
    };
    for _ in 0..budget {
        let h = random_capped(&mut rng, ell, ell - 2 - d_prime);
        let mut edges = Vec::new();
        for u in 1..=ell as u32 {
            for v in u + 1..=ell as u32 {
                if !h.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        let g2 = Graph::from_edges(ell, edges)?;
        if g2.min_degree() >= d_prime + 1 && is_self_ordered(&g2) {
            return Ok((g1, g2));
        }
    }
    Err(AssemblyError::SearchExhausted { what: "a dense complement base graph", budget })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stub_draws_are_regular() {
        let mut rng = rng_from_seed(3);
        let mut hits = 0;
        for _ in 0..60 {
            if let Some(g) = random_regular(&mut rng, 8, 3) {
                assert!(g.degrees().iter().all(|&d| d == 3));
                hits += 1;
            }
        }
        assert!(hits > 0, "the configuration model should land sometimes");
    }

    #[test]
    fn capped_draws_respect_the_cap() {
        let mut rng = rng_from_seed(4);
        for _ in 0..20 {
            let g = random_capped(&mut rng, 9, 3);
            assert!(g.max_degree() <= 3);
        }
    }
}
