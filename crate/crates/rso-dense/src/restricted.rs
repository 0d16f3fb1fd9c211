use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use rso_graph::Permutation;
use rso_perms::seeded::{random_derangement, rng_from_seed};
use rso_verify::{derangements, nm_extractor_error, NmMode, TwoSourceFunction};

use crate::error::DenseError;
use crate::table::ratio_f64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RestrictedMode {
    Exact,
    Sampled { samples: u64, seed: u64 },
}

pub const RESTRICTED_EXACT_LIMIT: usize = 7;

/// Band of table disagreement under side-preserving tampering: the
/// smallest and largest fraction of cells changed when both arguments
/// are deranged independently.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictedReport {
    pub min_ratio: Ratio<i64>,
    pub max_ratio: Ratio<i64>,
    pub pairs_examined: u64,
    pub exact: bool,
    pub seed: Option<u64>,
}

impl RestrictedReport {
    /// Half-width of the band around 1/2: the smallest eps for which
    /// every examined pair changed a (1/2 +- eps) fraction of cells.
    pub fn epsilon(&self) -> Ratio<i64> {
        let half = Ratio::new(1i64, 2);
        (half - self.min_ratio).max(self.max_ratio - half)
    }
}

fn disagreement(f: &TwoSourceFunction, sigma: &Permutation, tau: &Permutation) -> Ratio<i64> {
    let mut count = 0i64;
    for x in 1..=f.rows() {
        let moved = f.row_word(sigma.apply(x as u32) as usize);
        let permuted = (1..=f.cols() as u32)
            .fold(0u64, |w, y| w | u64::from(moved >> (tau.apply(y) - 1) & 1) << (y - 1));
        count += (f.row_word(x) ^ permuted).count_ones() as i64;
    }
    Ratio::new(count, (f.rows() * f.cols()) as i64)
}

/// Scan the disagreement band over pairs of derangements acting on the
/// two sides separately. On the graph built from the table this covers
/// exactly the relabelings that keep each side on itself and fix
/// nothing; internal clique edges are invariant under those, so the
/// table holds all the signal. Exact mode enumerates every pair and
/// needs both sides at or below 7.
pub fn bipartite_restricted_robustness(
    f: &TwoSourceFunction,
    mode: RestrictedMode,
) -> Result<RestrictedReport, DenseError> {
    if f.rows() < 2 || f.cols() < 2 {
        return Err(DenseError::BadParams(format!(
            "derangements need at least two points per side, got {}x{}",
            f.rows(),
            f.cols()
        )));
    }
    let mut min = Ratio::new(i64::MAX, 1);
    let mut max = Ratio::new(0, 1);
    let mut pairs = 0u64;
    match mode {
        RestrictedMode::Exact => {
            let limit = RESTRICTED_EXACT_LIMIT;
            if f.rows() > limit || f.cols() > limit {
                return Err(DenseError::BadParams(format!(
                    "exact scan covers sides up to {limit}, got {}x{}",
                    f.rows(),
                    f.cols()
                )));
            }
            let row_ds = derangements(f.rows());
            let col_ds = derangements(f.cols());
            for sigma in &row_ds {
                for tau in &col_ds {
                    let r = disagreement(f, sigma, tau);
                    min = min.min(r);
                    max = max.max(r);
                    pairs += 1;
                }
            }
            Ok(RestrictedReport { min_ratio: min, max_ratio: max, pairs_examined: pairs, exact: true, seed: None })
        }
        RestrictedMode::Sampled { samples, seed } => {
            let mut rng = rng_from_seed(seed);
            for _ in 0..samples.max(1) {
                let sigma = random_derangement(&mut rng, f.rows());
                let tau = random_derangement(&mut rng, f.cols());
                let r = disagreement(f, &sigma, &tau);
                min = min.min(r);
                max = max.max(r);
                pairs += 1;
            }
            Ok(RestrictedReport { min_ratio: min, max_ratio: max, pairs_examined: pairs, exact: false, seed: Some(seed) })
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ReversalOutcome {
    /// The disagreement band was tight enough to force a tampering
    /// error bound, and the measured error kept to it.
    Checked { eps_restricted: Ratio<i64>, nm_error: Ratio<i64>, bound: f64 },
    /// The band was vacuous (eps >= 1/2 admits every table), so no
    /// bound follows and none was checked.
    Skipped { eps_restricted: Ratio<i64>, reason: String },
}

/// From band to extractor: if side-preserving tampering always changes
/// close to half the cells, the table's full tampering error is small
/// too, at most eps + sqrt(2 eps) plus the caller's slack. Both scans
/// run exact, so the table must be square with side at most 6.
pub fn reversal_check(f: &TwoSourceFunction, slack: f64) -> Result<ReversalOutcome, DenseError> {
    if f.rows() != f.cols() {
        return Err(DenseError::BadParams(format!(
            "the tampering scan needs a square table, got {}x{}",
            f.rows(),
            f.cols()
        )));
    }
    let band = bipartite_restricted_robustness(f, RestrictedMode::Exact)?;
    let eps = band.epsilon();
    if eps >= Ratio::new(1, 2) {
        return Ok(ReversalOutcome::Skipped {
            eps_restricted: eps,
            reason: format!(
                "disagreement band is vacuous at eps = {eps}; every table satisfies it"
            ),
        });
    }
    let eps_f = ratio_f64(eps);
    let bound = eps_f + (2.0 * eps_f).sqrt() + slack;
    let k = usize::BITS - (f.rows() - 1).leading_zeros();
    let nm = nm_extractor_error(f, k, NmMode::Exact)?;
    if ratio_f64(nm.epsilon) > bound {
        return Err(DenseError::BoundExceeded {
            what: "tampering error",
            measured: ratio_f64(nm.epsilon),
            bound,
        });
    }
    Ok(ReversalOutcome::Checked { eps_restricted: eps, nm_error: nm.epsilon, bound })
}

/// Double the row side of a table on [N] x [2N] by ignoring a leading
/// selector bit: row b.x of the lift reads row x of the input. The lift
/// is square, so tampering scans apply to it.
pub fn appendix_lift(e: &TwoSourceFunction) -> Result<TwoSourceFunction, DenseError> {
    if e.cols() != 2 * e.rows() {
        return Err(DenseError::BadParams(format!(
            "the lift squares a table on [N] x [2N], got {}x{}",
            e.rows(),
            e.cols()
        )));
    }
    let rows = e.rows();
    Ok(TwoSourceFunction::from_fn(2 * rows, 2 * rows, |x, y| {
        e.value((x - 1) % rows + 1, y)
    }))
}

/// The one-sided blind spot: lift a table as above, flip the selector
/// bit on the first argument (a derangement), leave the second alone
/// (not a derangement). The two evaluations coincide cell for cell, so
/// the joint distribution sits on the diagonal and its distance from an
/// unbiased coin paired with the same marginal is exactly 1/2, for any
/// input table. Definitions that insist both tampering maps move every
/// point rule this pair out; one-sided ones do not.
pub fn appendix_counterexample(e: &TwoSourceFunction) -> Result<Ratio<i64>, DenseError> {
    let lifted = appendix_lift(e)?;
    let rows = e.rows();
    let n2 = lifted.rows();
    let mut c = [[0i64; 2]; 2];
    for x in 1..=n2 {
        let fx = (x - 1 + rows) % n2 + 1;
        for y in 1..=lifted.cols() {
            let a = lifted.value(x, y) as usize;
            let b = lifted.value(fx, y) as usize;
            c[a][b] += 1;
        }
    }
    let total = (n2 * lifted.cols()) as i64;
    let mut num = 0i64;
    for b in 0..2 {
        let marg = c[0][b] + c[1][b];
        for a in 0..2 {
            num += (2 * c[a][b] - marg).abs();
        }
    }
    Ok(Ratio::new(num, 4 * total))
}
