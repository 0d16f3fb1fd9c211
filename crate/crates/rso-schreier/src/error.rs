use thiserror::Error;

#[derive(Debug, Error)]
pub enum SchreierError {
    #[error("a permutation family needs at least one permutation")]
    EmptyFamily,
    #[error("permutation {index} acts on {got} points, family acts on {expected}")]
    MixedDegrees { index: usize, expected: usize, got: usize },
    #[error("{p} is not an odd prime")]
    NotOddPrime { p: u64 },
    #[error("matrix {index} has determinant {det}, need 1")]
    BadDeterminant { index: usize, det: u64 },
}
