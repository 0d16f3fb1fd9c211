//! Deterministic randomness for the whole workspace. Every randomized
//! routine takes an explicit u64 seed and draws through these helpers,
//! so results are reproducible across platforms and releases: the
//! stream depends only on ChaCha8 and the rejection logic below, never
//! on distribution code that might change under us.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rso_graph::Permutation;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform draw from 0..n by rejection, bias-free.
pub fn rand_below(rng: &mut ChaCha8Rng, n: u64) -> u64 {
    assert!(n > 0, "rand_below needs a positive bound");
    // Accept only draws below the largest multiple of n in the u64
    // range; anything past it would skew the residues.
    let overhang = (u64::MAX % n + 1) % n;
    let cutoff = u64::MAX - overhang;
    loop {
        let x = rng.next_u64();
        if x <= cutoff {
            return x % n;
        }
    }
}

pub fn coin(rng: &mut ChaCha8Rng) -> bool {
    rng.next_u32() & 1 == 1
}

/// Uniform permutation of 1..=n by Fisher-Yates.
pub fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut images: Vec<u32> = (1..=n as u32).collect();
    for i in (1..n).rev() {
        let j = rand_below(rng, i as u64 + 1) as usize;
        images.swap(i, j);
    }
    Permutation::from_images(images).expect("shuffle of the identity is a bijection")
}

/// Uniform derangement of 1..=n by rejection sampling.
pub fn random_derangement(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    assert!(n >= 2, "no derangement on fewer than two points");
    loop {
        let p = random_permutation(rng, n);
        if p.is_derangement() {
            return p;
        }
    }
}

/// k distinct values from 1..=n, ascending; partial Fisher-Yates.
pub fn random_subset(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Vec<u32> {
    assert!(k <= n);
    let mut pool: Vec<u32> = (1..=n as u32).collect();
    for i in 0..k {
        let j = i + rand_below(rng, (n - i) as u64) as usize;
        pool.swap(i, j);
    }
    let mut out = pool[..k].to_vec();
    out.sort_unstable();
    out
}
