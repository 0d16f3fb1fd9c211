//! Permutation-space scan engines. Both engines minimize a caller-chosen
//! rational key over permutations and tie-break witnesses by
//! lexicographically smallest image vector, so any partition of the scan
//! space merged by min-reduction yields the identical answer. The exact
//! engine partitions by the image of vertex 1 and hands blocks to
//! threads round-robin; thread count therefore never changes the report.

use num_rational::Ratio;

use rso_graph::Permutation;
use rso_perms::seeded::{random_permutation, rng_from_seed};

type Best = Option<(Ratio<i64>, Vec<u32>)>;

fn offer(best: &mut Best, ratio: Ratio<i64>, images: &[u32]) {
    let replace = match best {
        None => true,
        Some((r, w)) => ratio < *r || (ratio == *r && images < w.as_slice()),
    };
    if replace {
        *best = Some((ratio, images.to_vec()));
    }
}

fn merge(a: Best, b: Best) -> Best {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(x), Some(y)) => {
            if (y.0, &y.1) < (x.0, &x.1) {
                Some(y)
            } else {
                Some(x)
            }
        }
    }
}

fn enumerate_block<K>(first: u32, n: usize, key: &K, best: &mut Best, examined: &mut u64)
where
    K: Fn(&[u32]) -> Option<Ratio<i64>>,
{
    let mut images = Vec::with_capacity(n);
    images.push(first);
    let mut used: u64 = 1 << (first - 1);
    rec(n, &mut images, &mut used, key, best, examined);
}

fn rec<K>(n: usize, images: &mut Vec<u32>, used: &mut u64, key: &K, best: &mut Best, examined: &mut u64)
where
    K: Fn(&[u32]) -> Option<Ratio<i64>>,
{
    if images.len() == n {
        if let Some(r) = key(images) {
            *examined += 1;
            offer(best, r, images);
        }
        return;
    }
    for w in 1..=n as u32 {
        let bit = 1u64 << (w - 1);
        if *used & bit == 0 {
            *used |= bit;
            images.push(w);
            rec(n, images, used, key, best, examined);
            images.pop();
            *used &= !bit;
        }
    }
}

/// Minimize `key` over all n! permutations of [n] (key returns None to
/// skip one). Returns the minimum with its lex-smallest witness and the
/// number of evaluated permutations.
pub(crate) fn min_scan<K>(
    n: usize,
    threads: usize,
    key: &K,
) -> (Option<(Ratio<i64>, Permutation)>, u64)
where
    K: Fn(&[u32]) -> Option<Ratio<i64>> + Sync,
{
    assert!(n <= 64, "scan space indexed by u64 vertex masks");
    let threads = threads.max(1);
    let (best, examined) = if threads == 1 || n < 2 {
        let mut best: Best = None;
        let mut examined = 0u64;
        for first in 1..=n as u32 {
            enumerate_block(first, n, key, &mut best, &mut examined);
        }
        (best, examined)
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..threads)
                .map(|t| {
                    scope.spawn(move || {
                        let mut best: Best = None;
                        let mut examined = 0u64;
                        for first in 1..=n as u32 {
                            if (first as usize - 1) % threads == t {
                                enumerate_block(first, n, key, &mut best, &mut examined);
                            }
                        }
                        (best, examined)
                    })
                })
                .collect();
            let mut best: Best = None;
            let mut examined = 0u64;
            for h in handles {
                let (b, e) = h.join().expect("scan thread panicked");
                best = merge(best, b);
                examined += e;
            }
            (best, examined)
        })
    };
    (
        best.map(|(r, w)| (r, Permutation::from_images(w).expect("scan yields bijections"))),
        examined,
    )
}

/// Minimize `key` over a structured candidate battery: all
/// transpositions, all 3-cycles when n is small enough for the cubic
/// family, caller-supplied permutations, and seeded uniform samples.
pub(crate) fn adversarial_scan<K>(
    n: usize,
    families: &[Permutation],
    samples: u64,
    seed: u64,
    key: &K,
) -> (Option<(Ratio<i64>, Permutation)>, u64)
where
    K: Fn(&[u32]) -> Option<Ratio<i64>>,
{
    const THREE_CYCLE_CAP: usize = 60;
    let mut best: Best = None;
    let mut examined = 0u64;
    let mut consider = |images: &[u32]| {
        if let Some(r) = key(images) {
            examined += 1;
            offer(&mut best, r, images);
        }
    };

    let identity: Vec<u32> = (1..=n as u32).collect();
    let mut images = identity.clone();
    for a in 0..n {
        for b in a + 1..n {
            images.swap(a, b);
            consider(&images);
            images.swap(a, b);
        }
    }
    if n <= THREE_CYCLE_CAP {
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    // a -> b -> c -> a
                    images[a] = identity[b];
                    images[b] = identity[c];
                    images[c] = identity[a];
                    consider(&images);
                    // a -> c -> b -> a
                    images[a] = identity[c];
                    images[c] = identity[b];
                    images[b] = identity[a];
                    consider(&images);
                    images[a] = identity[a];
                    images[b] = identity[b];
                    images[c] = identity[c];
                }
            }
        }
    }
    for p in families {
        assert_eq!(p.n(), n, "family permutation on the wrong vertex count");
        consider(p.images());
    }
    let mut rng = rng_from_seed(seed);
    for _ in 0..samples {
        let p = random_permutation(&mut rng, n);
        consider(p.images());
    }
    (
        best.map(|(r, w)| (r, Permutation::from_images(w).expect("scan yields bijections"))),
        examined,
    )
}
