use serde::{Deserialize, Serialize};

use rso_graph::Permutation;

use crate::error::PermsError;
use crate::seeded::rng_from_seed;

/// Binary linear code with block length L <= 64, stored as a generator
/// matrix of k row words (bit j of row i = entry (i, j)). Messages are
/// indexed 1..=2^k and encode(i) is the codeword of message i-1.
///
/// `min_distance` is the exact minimum weight when `verified` (checked
/// over all nonzero codewords, done whenever 2^k <= 4096); otherwise it
/// is a declared bound from sampling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinaryCode {
    pub k: usize,
    pub l: usize,
    pub generator: Vec<u64>,
    pub min_distance: usize,
    pub verified: bool,
}

impl BinaryCode {
    /// Codeword of message i, i in 1..=2^k, as the low `l` bits.
    pub fn encode(&self, i: usize) -> u64 {
        assert!(i >= 1 && i <= 1usize << self.k, "message index {i} out of range");
        let msg = (i - 1) as u64;
        let mut word = 0u64;
        for (row, &g) in self.generator.iter().enumerate() {
            if msg >> row & 1 == 1 {
                word ^= g;
            }
        }
        word
    }

    pub fn codewords(&self) -> usize {
        1usize << self.k
    }

    /// Exact minimum weight over nonzero codewords; exponential in k.
    pub fn exact_min_distance(&self) -> usize {
        (1..1u64 << self.k)
            .map(|msg| {
                let mut word = 0u64;
                for (row, &g) in self.generator.iter().enumerate() {
                    if msg >> row & 1 == 1 {
                        word ^= g;
                    }
                }
                word.count_ones() as usize
            })
            .min()
            .unwrap_or(0)
    }
}

/// The repetition code 1 -> 1^l, useful as a tiny verified baseline.
pub fn repetition_code(l: usize) -> BinaryCode {
    assert!(l >= 1 && l <= 64);
    let word = if l == 64 { u64::MAX } else { (1u64 << l) - 1 };
    BinaryCode { k: 1, l, generator: vec![word], min_distance: l, verified: true }
}

fn gf2_rank(rows: &[u64]) -> usize {
    let mut basis: Vec<u64> = Vec::new();
    for &r in rows {
        let mut x = r;
        for &b in &basis {
            x = x.min(x ^ b);
        }
        if x != 0 {
            basis.push(x);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

/// Random linear code of rate roughly `rate_target`: L = ceil(k / rate),
/// full-rank generator so encode is injective. Tries several seeded
/// matrices and keeps the one with the largest minimum distance. Exact
/// verification when 2^k <= 4096, sampled estimate above that.
pub fn make_small_code(k: usize, rate_target: f64, seed: u64) -> Result<BinaryCode, PermsError> {
    if k == 0 || !(rate_target > 0.0 && rate_target <= 1.0) {
        return Err(PermsError::BadParams(format!("k={k}, rate_target={rate_target}")));
    }
    let l = (k as f64 / rate_target).ceil() as usize;
    if l > 64 || l < k {
        return Err(PermsError::BadParams(format!("block length {l} unsupported")));
    }
    let mut rng = rng_from_seed(seed);
    let mask = if l == 64 { u64::MAX } else { (1u64 << l) - 1 };
    let exact = k <= 12;
    let mut best: Option<BinaryCode> = None;
    let tries = 64;
    let mut found_full_rank = false;
    for _ in 0..tries {
        let rows: Vec<u64> = (0..k).map(|_| rng.next_u64() & mask).collect();
        if gf2_rank(&rows) != k {
            continue;
        }
        found_full_rank = true;
        let mut code =
            BinaryCode { k, l, generator: rows, min_distance: 0, verified: exact };
        code.min_distance = if exact {
            code.exact_min_distance()
        } else {
            // Sampled lower-effort estimate: weight of 4096 random
            // nonzero messages. Declared, not verified.
            let mut d = l;
            for _ in 0..4096 {
                let msg = 1 + crate::seeded::rand_below(&mut rng, (1u64 << k) - 1);
                let mut word = 0u64;
                for (row, &g) in code.generator.iter().enumerate() {
                    if msg >> row & 1 == 1 {
                        word ^= g;
                    }
                }
                d = d.min(word.count_ones() as usize);
            }
            d
        };
        if best.as_ref().map_or(true, |b| code.min_distance > b.min_distance) {
            best = Some(code);
        }
    }
    best.ok_or(PermsError::SearchExhausted {
        what: "full-rank generator matrix",
        budget: tries,
        found: found_full_rank as usize,
    })
}

use rand::RngCore;

/// Involution on [2L] from codeword i: slot j (pair 2j-1, 2j) is swapped
/// exactly when bit j of C(i) is set.
pub fn code_based_perm(code: &BinaryCode, i: usize) -> Permutation {
    let word = code.encode(i);
    let n = 2 * code.l;
    let mut images: Vec<u32> = (1..=n as u32).collect();
    for j in 0..code.l {
        if word >> j & 1 == 1 {
            images.swap(2 * j, 2 * j + 1);
        }
    }
    Permutation::from_images(images).expect("disjoint transpositions form a bijection")
}

/// |{v : pi(v) != sigma(v)}|.
pub fn perm_distance(a: &Permutation, b: &Permutation) -> usize {
    assert_eq!(a.n(), b.n(), "distance needs equal degrees");
    a.images().iter().zip(b.images()).filter(|(x, y)| x != y).count()
}

/// m permutations of [l], pairwise distance >= ceil(delta * l), grown
/// greedily from a seeded uniform candidate stream. The returned
/// collection is re-verified by a full pairwise scan.
pub fn greedy_far_collection(
    l: usize,
    m: usize,
    delta: f64,
    seed: u64,
    budget: usize,
) -> Result<Vec<Permutation>, PermsError> {
    let threshold = (delta * l as f64).ceil() as usize;
    let mut rng = rng_from_seed(seed);
    let mut picked: Vec<Permutation> = Vec::with_capacity(m);
    let mut spent = 0usize;
    while picked.len() < m {
        if spent >= budget {
            return Err(PermsError::SearchExhausted {
                what: "far-apart permutation collection",
                budget,
                found: picked.len(),
            });
        }
        spent += 1;
        let cand = crate::seeded::random_permutation(&mut rng, l);
        if picked.iter().all(|p| perm_distance(p, &cand) >= threshold) {
            picked.push(cand);
        }
    }
    for i in 0..picked.len() {
        for j in i + 1..picked.len() {
            assert!(
                perm_distance(&picked[i], &picked[j]) >= threshold,
                "collection violates its own distance bound"
            );
        }
    }
    Ok(picked)
}

pub fn code_perm_family(code: &BinaryCode) -> Vec<Permutation> {
    (1..=code.codewords()).map(|i| code_based_perm(code, i)).collect()
}
