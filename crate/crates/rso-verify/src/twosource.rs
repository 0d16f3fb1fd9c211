use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use rso_graph::Permutation;
use rso_perms::seeded::{random_derangement, random_subset, rng_from_seed};

use crate::report::VerifyError;

/// Boolean function on [rows] x [cols], stored as one bit row word per
/// row (bit y-1 of table[x-1] = F(x, y)). Cols are capped at 64; every
/// table this workspace certifies is desk-scale.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoSourceFunction {
    rows: usize,
    cols: usize,
    table: Vec<u64>,
}

impl TwoSourceFunction {
    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> bool) -> TwoSourceFunction {
        assert!(cols <= 64, "row words hold at most 64 columns");
        assert!(rows >= 1 && cols >= 1);
        let table = (1..=rows)
            .map(|x| (1..=cols).filter(|&y| f(x, y)).fold(0u64, |w, y| w | 1 << (y - 1)))
            .collect();
        TwoSourceFunction { rows, cols, table }
    }

    pub fn from_rows(cols: usize, table: Vec<u64>) -> TwoSourceFunction {
        assert!(cols >= 1 && cols <= 64 && !table.is_empty());
        let mask = if cols == 64 { u64::MAX } else { (1u64 << cols) - 1 };
        assert!(table.iter().all(|&w| w & !mask == 0), "row word exceeds {cols} columns");
        TwoSourceFunction { rows: table.len(), cols, table }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn value(&self, x: usize, y: usize) -> bool {
        assert!(x >= 1 && x <= self.rows && y >= 1 && y <= self.cols);
        self.table[x - 1] >> (y - 1) & 1 == 1
    }

    pub fn row_word(&self, x: usize) -> u64 {
        self.table[x - 1]
    }

    pub fn row_words(&self) -> &[u64] {
        &self.table
    }

    pub fn transposed(&self) -> TwoSourceFunction {
        TwoSourceFunction::from_fn(self.cols, self.rows, |x, y| self.value(y, x))
    }

    pub fn permuted(&self, row_perm: &Permutation, col_perm: &Permutation) -> TwoSourceFunction {
        assert_eq!(row_perm.n(), self.rows);
        assert_eq!(col_perm.n(), self.cols);
        TwoSourceFunction::from_fn(self.rows, self.cols, |x, y| {
            self.value(row_perm.apply(x as u32) as usize, col_perm.apply(y as u32) as usize)
        })
    }
}

fn deviation(count: u64, total: u64) -> Ratio<i64> {
    // |count/total - 1/2| as an exact rational.
    Ratio::new((2 * count as i64 - total as i64).abs(), 2 * total as i64)
}

/// Largest deviation from balance across: every row, every column, every
/// row pair's disagreement pattern, every column pair's. The returned
/// epsilon is the smallest value for which the table is
/// epsilon-quasi-orthogonal in both directions.
pub fn quasi_orthogonality_error(f: &TwoSourceFunction) -> Ratio<i64> {
    let col_mask = if f.cols == 64 { u64::MAX } else { (1u64 << f.cols) - 1 };
    let mut eps = Ratio::new(0, 1);
    for x in 0..f.rows {
        eps = eps.max(deviation(f.table[x].count_ones() as u64, f.cols as u64));
        for x2 in x + 1..f.rows {
            let h = (f.table[x] ^ f.table[x2]) & col_mask;
            eps = eps.max(deviation(h.count_ones() as u64, f.cols as u64));
        }
    }
    let t = f.transposed();
    for y in 0..t.rows {
        eps = eps.max(deviation(t.table[y].count_ones() as u64, t.cols as u64));
        for y2 in y + 1..t.rows {
            let h = t.table[y] ^ t.table[y2];
            eps = eps.max(deviation(h.count_ones() as u64, t.cols as u64));
        }
    }
    eps
}

/// All derangements of 1..=n, lexicographic by image vector.
pub fn derangements(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut images: Vec<u32> = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    fn rec(n: usize, images: &mut Vec<u32>, used: &mut [bool], out: &mut Vec<Permutation>) {
        let pos = images.len();
        if pos == n {
            out.push(Permutation::from_images(images.clone()).expect("bijection by construction"));
            return;
        }
        for w in 1..=n as u32 {
            if !used[w as usize] && w as usize != pos + 1 {
                used[w as usize] = true;
                images.push(w);
                rec(n, images, used, out);
                images.pop();
                used[w as usize] = false;
            }
        }
    }
    rec(n, &mut images, &mut used, &mut out);
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NmMode {
    Exact,
    Sampled { samples: u64, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NmReport {
    pub epsilon: Ratio<i64>,
    pub pairs_examined: u64,
    pub exact: bool,
    pub seed: Option<u64>,
}

pub const NM_EXACT_LIMIT: usize = 6;

/// Statistical distance between (F(X,Y), F(sigma X, tau Y)) and an
/// unbiased coin paired with the same second coordinate, with X uniform
/// on sx and Y uniform on sy.
fn nm_distance(f: &TwoSourceFunction, sigma: &Permutation, tau: &Permutation, sx: &[u32], sy: &[u32]) -> Ratio<i64> {
    let mut c = [[0i64; 2]; 2];
    for &x in sx {
        for &y in sy {
            let a = f.value(x as usize, y as usize) as usize;
            let b = f.value(sigma.apply(x) as usize, tau.apply(y) as usize) as usize;
            c[a][b] += 1;
        }
    }
    let total = (sx.len() * sy.len()) as i64;
    let mut num = 0i64;
    for b in 0..2 {
        let marg = c[0][b] + c[1][b];
        for a in 0..2 {
            num += (2 * c[a][b] - marg).abs();
        }
    }
    Ratio::new(num, 4 * total)
}

/// Worst-case extraction error under tampering: max over pairs of
/// derangements (sigma, tau) of the distance above. Exact mode scans all
/// derangement pairs with uniform sources (k is ignored there); sampled
/// mode draws `samples` pairs, and flat sources of 2^k points when
/// 2^k < N.
pub fn nm_extractor_error(
    f: &TwoSourceFunction,
    k: u32,
    mode: NmMode,
) -> Result<NmReport, VerifyError> {
    if f.rows != f.cols {
        return Err(VerifyError::NonSquare { rows: f.rows, cols: f.cols });
    }
    let n = f.rows;
    if n < 2 {
        return Err(VerifyError::Degenerate(format!("no derangements on {n} point(s)")));
    }
    let full: Vec<u32> = (1..=n as u32).collect();
    match mode {
        NmMode::Exact => {
            if n > NM_EXACT_LIMIT {
                return Err(VerifyError::TooLarge { n, limit: NM_EXACT_LIMIT });
            }
            let ds = derangements(n);
            let mut eps = Ratio::new(0, 1);
            let mut pairs = 0u64;
            for sigma in &ds {
                for tau in &ds {
                    eps = eps.max(nm_distance(f, sigma, tau, &full, &full));
                    pairs += 1;
                }
            }
            Ok(NmReport { epsilon: eps, pairs_examined: pairs, exact: true, seed: None })
        }
        NmMode::Sampled { samples, seed } => {
            let mut rng = rng_from_seed(seed);
            let flat = 1usize << k;
            let mut eps = Ratio::new(0, 1);
            let mut pairs = 0u64;
            for _ in 0..samples.max(1) {
                let sigma = random_derangement(&mut rng, n);
                let tau = random_derangement(&mut rng, n);
                let (sx, sy) = if flat < n {
                    (random_subset(&mut rng, n, flat), random_subset(&mut rng, n, flat))
                } else {
                    (full.clone(), full.clone())
                };
                eps = eps.max(nm_distance(f, &sigma, &tau, &sx, &sy));
                pairs += 1;
            }
            Ok(NmReport { epsilon: eps, pairs_examined: pairs, exact: false, seed: Some(seed) })
        }
    }
}
