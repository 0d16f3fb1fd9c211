use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use rso_graph::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ScanMode {
    Exact,
    AdversarialSampled,
}

/// Outcome of a robustness scan. gamma_upper is always the ratio the
/// stored witness achieves; in exact mode it coincides with the true
/// minimum and gamma_exact is set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RobustnessReport {
    pub gamma_exact: Option<Ratio<i64>>,
    pub gamma_upper: Ratio<i64>,
    pub witness: Permutation,
    pub mode: ScanMode,
    pub permutations_examined: u64,
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExpansionMode {
    Exact,
    Sampled,
    Spectral,
}

/// Vertex-expansion findings. Exact mode fills gamma_combinatorial (the
/// true minimum over subsets up to half the graph); sampled mode fills
/// only gamma_upper, the best cut found; spectral mode fills lambda2.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExpansionReport {
    pub gamma_combinatorial: Option<Ratio<i64>>,
    pub gamma_upper: Option<Ratio<i64>>,
    pub lambda2: Option<f64>,
    pub mode: ExpansionMode,
    pub witness: Option<Vec<u32>>,
    pub seed: Option<u64>,
}

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error("n = {n} exceeds the exact-scan limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("table must be square, got {rows} x {cols}")]
    NonSquare { rows: usize, cols: usize },
}
