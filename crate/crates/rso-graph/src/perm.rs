use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// Bijection on 1..=n, stored as the image vector: images[i-1] = mu(i).
/// Ordering is lexicographic on the image vector, which is what every
/// deterministic witness tie-break in the workspace relies on.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation { images: (1..=n as u32).collect() }
    }

    pub fn from_images(images: impl Into<Vec<u32>>) -> Result<Permutation, GraphError> {
        let images = images.into();
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v as usize > n {
                return Err(GraphError::NotABijection {
                    n,
                    reason: format!("image {v} out of range"),
                });
            }
            if seen[v as usize - 1] {
                return Err(GraphError::NotABijection {
                    n,
                    reason: format!("image {v} repeated"),
                });
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// Transposition (a b), everything else fixed.
    pub fn transposition(n: usize, a: u32, b: u32) -> Permutation {
        assert!(a != b && a >= 1 && b >= 1 && a as usize <= n && b as usize <= n);
        let mut images: Vec<u32> = (1..=n as u32).collect();
        images.swap(a as usize - 1, b as usize - 1);
        Permutation { images }
    }

    /// Cyclic shift a -> b -> c -> a, everything else fixed.
    pub fn three_cycle(n: usize, a: u32, b: u32, c: u32) -> Permutation {
        assert!(a != b && b != c && a != c);
        let mut images: Vec<u32> = (1..=n as u32).collect();
        images[a as usize - 1] = b;
        images[b as usize - 1] = c;
        images[c as usize - 1] = a;
        Permutation { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, v: u32) -> u32 {
        self.images[v as usize - 1]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Permutation { images: inv }
    }

    /// (self . other)(v) = self(other(v)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "composing permutations of different sizes");
        Permutation {
            images: other.images.iter().map(|&v| self.apply(v)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i as u32 + 1)
    }

    pub fn is_derangement(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v != i as u32 + 1)
    }

    pub fn nonfixed(&self) -> Vec<u32> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v != i as u32 + 1)
            .map(|(i, _)| i as u32 + 1)
            .collect()
    }

    pub fn nonfixed_count(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v != i as u32 + 1)
            .count()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}
