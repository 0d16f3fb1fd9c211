use rso_graph::{ColoredMultiGraph, DirectedColoredMultiGraph, Permutation};

use crate::error::SchreierError;
use crate::family::{primary_graph, secondary_graph, PermutationFamily};

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut f = 2;
    while f * f <= p {
        if p % f == 0 {
            return false;
        }
        f += 1;
    }
    true
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Projective point over GF(p), stored as its canonical representative:
/// the first nonzero coordinate is scaled to 1, so each line through
/// the origin has exactly one representative, (1, i) or (0, 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Point(u64, u64);

fn canonical(x: u64, y: u64, p: u64) -> Point {
    if x % p != 0 {
        Point(1, y % p * inv_mod(x % p, p) % p)
    } else {
        debug_assert!(y % p != 0, "the zero vector is not a projective point");
        Point(0, 1)
    }
}

/// Point ids 1..=p+1: (1, i) is point i+1, (0, 1) is point p+1.
fn point_id(pt: Point, p: u64) -> u32 {
    if pt.0 == 1 {
        pt.1 as u32 + 1
    } else {
        p as u32 + 1
    }
}

fn point_of(id: u32, p: u64) -> Point {
    if id as u64 == p + 1 {
        Point(0, 1)
    } else {
        Point(1, id as u64 - 1)
    }
}

/// The action of determinant-1 matrices on the projective line over
/// GF(p): matrix [[a,b],[c,d]] sends a point u to the class of M*u.
/// Each matrix is given row-major with signed entries (so -1 is fine)
/// and must have determinant 1 mod p. Returns the permutations of the
/// p+1 canonical points.
pub fn sl2_projective_perms(
    p: u64,
    matrices: &[[i64; 4]],
) -> Result<PermutationFamily, SchreierError> {
    if p < 3 || !is_prime(p) {
        return Err(SchreierError::NotOddPrime { p });
    }
    let reduce = |x: i64| x.rem_euclid(p as i64) as u64;
    let mut perms = Vec::with_capacity(matrices.len());
    for (index, m) in matrices.iter().enumerate() {
        let [a, b, c, d] = [reduce(m[0]), reduce(m[1]), reduce(m[2]), reduce(m[3])];
        let det = (a * d % p + p - b * c % p) % p;
        if det != 1 {
            return Err(SchreierError::BadDeterminant { index, det });
        }
        let mut images = Vec::with_capacity(p as usize + 1);
        for id in 1..=p as u32 + 1 {
            let Point(x, y) = point_of(id, p);
            let image = canonical(a * x + b * y, c * x + d * y, p);
            images.push(point_id(image, p));
        }
        let perm = Permutation::from_images(images)
            .expect("an invertible matrix permutes the projective line");
        perms.push(perm);
    }
    PermutationFamily::new(perms)
}

/// The paper-standard generating pair: a shear and a quarter turn.
pub const SL2_GENERATORS: [[i64; 4]; 2] = [[1, 1, 0, 1], [0, 1, -1, 0]];

/// Primary and secondary Schreier graphs of the standard SL2(p) action:
/// p+1 and (p+1)p vertices respectively.
pub fn sl2_default(
    p: u64,
) -> Result<(DirectedColoredMultiGraph, ColoredMultiGraph), SchreierError> {
    let family = sl2_projective_perms(p, &SL2_GENERATORS)?;
    Ok((primary_graph(&family), secondary_graph(&family)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes_and_inverses() {
        let primes: Vec<u64> = (0..30).filter(|&x| is_prime(x)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        for p in [3u64, 5, 7, 11, 13] {
            for a in 1..p {
                assert_eq!(a * inv_mod(a, p) % p, 1);
            }
        }
    }
}
