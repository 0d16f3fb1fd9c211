use num_rational::Ratio;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use rso_perms::seeded::{coin, rng_from_seed};
use rso_verify::{nm_extractor_error, quasi_orthogonality_error, NmMode, NmReport, TwoSourceFunction};

use crate::error::DenseError;

/// A two-argument boolean table bundled with the errors measured on it.
/// `eps_qo` is the exact quasi-orthogonality error when known; `eps_nm`
/// the tampering (non-malleability) error together with how it was
/// obtained. Builders fill in what they actually measured and leave the
/// rest `None`, so a missing field means "not measured", never "zero".
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeasuredTable {
    pub table: TwoSourceFunction,
    pub eps_qo: Option<Ratio<i64>>,
    pub eps_nm: Option<NmReport>,
    pub k: Option<u32>,
}

impl MeasuredTable {
    /// Wrap a table, measuring only its quasi-orthogonality (cheap, exact).
    pub fn from_table(table: TwoSourceFunction) -> MeasuredTable {
        let eps = quasi_orthogonality_error(&table);
        MeasuredTable { table, eps_qo: Some(eps), eps_nm: None, k: None }
    }
}

/// Smallest k with 2^k >= n.
fn ceil_log2(n: usize) -> u32 {
    usize::BITS - (n - 1).leading_zeros()
}

/// Inner product mod 2 over the nonzero l-bit strings, indexed by their
/// integer values 1..=2^l-1. Rows are nearly balanced because every
/// nonzero linear form splits the hypercube in half and only the zero
/// string is missing from the domain.
pub fn inner_product_table(l: u32) -> Result<MeasuredTable, DenseError> {
    if l == 0 || l > 6 {
        return Err(DenseError::BadParams(format!(
            "inner product domain covers nonzero l-bit strings for l in 1..=6, got {l}"
        )));
    }
    let n = (1usize << l) - 1;
    let table =
        TwoSourceFunction::from_fn(n, n, |x, y| (x & y).count_ones() & 1 == 1);
    Ok(MeasuredTable::from_table(table))
}

/// Bipartite predicate B(x, y) on nonzero l-bit strings x and nonzero
/// (l+2)-bit strings y: the inner product of y with G(x), where G appends
/// to x the ANDs of its first and of its last coordinate pair. The
/// padding keeps G injective and off the all-zero string, so every row
/// of B is split almost evenly, while the nonlinear bits keep column
/// pairs from aligning.
pub fn small_bias_bipartite(l: u32) -> Result<MeasuredTable, DenseError> {
    if !(2..=4).contains(&l) {
        return Err(DenseError::BadParams(format!(
            "the generator pads l-bit strings into l+2 bits for l in 2..=4, got {l}"
        )));
    }
    let rows = (1usize << l) - 1;
    let cols = (1usize << (l + 2)) - 1;
    let gen = |x: usize| -> usize {
        let top = (x >> (l - 1)) & (x >> (l - 2)) & 1;
        let bottom = (x >> 1) & x & 1;
        x << 2 | top << 1 | bottom
    };
    let mut seen = vec![false; cols + 1];
    for x in 1..=rows {
        let g = gen(x);
        assert!(g != 0 && !seen[g], "padded images must be distinct nonzero strings");
        seen[g] = true;
    }
    let table = TwoSourceFunction::from_fn(rows, cols, |x, y| (gen(x) & y).count_ones() & 1 == 1);
    Ok(MeasuredTable::from_table(table))
}

fn random_table(rng: &mut ChaCha8Rng, n: usize) -> TwoSourceFunction {
    let words = (0..n)
        .map(|_| (0..n).fold(0u64, |w, y| w | u64::from(coin(rng)) << y))
        .collect();
    TwoSourceFunction::from_rows(n, words)
}

/// Seeded search for an n x n table whose quasi-orthogonality error and
/// tampering error both come out at or below `eps_target`. Candidate
/// tables are fair-coin fillings; the cheap balance scan runs first and
/// the tampering scan (exact or sampled per `mode`) only on survivors.
/// A target of 0 always exhausts the budget: with N^2 cells, measured
/// distances live on a grid of step 1/N^2 and cannot vanish.
pub fn search_small_nmE(
    n: usize,
    eps_target: f64,
    seed: u64,
    budget: usize,
    mode: NmMode,
) -> Result<MeasuredTable, DenseError> {
    if !(2..=64).contains(&n) {
        return Err(DenseError::BadParams(format!("table side must be in 2..=64, got {n}")));
    }
    let k = ceil_log2(n);
    for attempt in 0..budget {
        let mut rng = rng_from_seed(seed.wrapping_add(attempt as u64));
        let table = random_table(&mut rng, n);
        let eps_qo = quasi_orthogonality_error(&table);
        if ratio_f64(eps_qo) > eps_target {
            continue;
        }
        let nm = nm_extractor_error(&table, k, mode)?;
        if ratio_f64(nm.epsilon) <= eps_target {
            return Ok(MeasuredTable { table, eps_qo: Some(eps_qo), eps_nm: Some(nm), k: Some(k) });
        }
    }
    Err(DenseError::SearchExhausted {
        what: format!("a {n}x{n} table with both measured errors at most {eps_target}"),
        budget,
    })
}

pub(crate) fn ratio_f64(r: Ratio<i64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn alive_mask(alive: &[usize]) -> u64 {
    alive.iter().fold(0u64, |m, &i| m | 1 << (i - 1))
}

fn deviation(count: u32, total: usize) -> Ratio<i64> {
    Ratio::new((2 * count as i64 - total as i64).abs(), 2 * total as i64)
}

/// Shrink a square table until it is quasi-orthogonal, by discarding
/// inputs instead of recoding them. Four passes, in order: rows whose
/// weight is off balance by more than the table's tampering error, then
/// columns, then a maximal disjoint family of row pairs that agree too
/// often, then column pairs. Discarding an index drops it from both
/// arguments, so the domain stays square. The tampering error bound of
/// the input defines "off balance"; a table that already meets it
/// everywhere comes back unchanged.
pub fn make_quasi_orthogonal(f: &MeasuredTable, k: u32) -> Result<MeasuredTable, DenseError> {
    let t = &f.table;
    if t.rows() != t.cols() {
        return Err(DenseError::BadParams(format!(
            "quasi-orthogonalization keeps the domain square, got {}x{}",
            t.rows(),
            t.cols()
        )));
    }
    let eps = f
        .eps_nm
        .as_ref()
        .ok_or_else(|| {
            DenseError::BadParams(
                "a measured tampering error is needed to define the violation threshold".into(),
            )
        })?
        .epsilon;
    let mut alive: Vec<usize> = (1..=t.rows()).collect();
    let half = Ratio::new(1i64, 2);

    // Rows first: weight counted over the surviving columns.
    let mask = alive_mask(&alive);
    let total = alive.len();
    alive.retain(|&x| deviation((t.row_word(x) & mask).count_ones(), total) <= eps);

    // Columns, on the shrunken table.
    let total = alive.len();
    let col_weight = |y: usize, alive: &[usize]| -> u32 {
        alive.iter().filter(|&&x| t.value(x, y)).count() as u32
    };
    let keep: Vec<usize> =
        alive.iter().copied().filter(|&y| deviation(col_weight(y, &alive), total) <= eps).collect();
    alive = keep;

    // Row pairs that disagree too rarely; drop both members of a maximal
    // disjoint violating family.
    let floor = half - eps;
    let mask = alive_mask(&alive);
    let total = alive.len() as i64;
    let mut dropped = vec![false; alive.len()];
    for i in 0..alive.len() {
        for j in i + 1..alive.len() {
            if dropped[i] || dropped[j] {
                continue;
            }
            let diff = ((t.row_word(alive[i]) ^ t.row_word(alive[j])) & mask).count_ones();
            if Ratio::new(diff as i64, total) < floor {
                dropped[i] = true;
                dropped[j] = true;
            }
        }
    }
    let mut alive: Vec<usize> =
        alive.iter().zip(&dropped).filter(|(_, &d)| !d).map(|(&x, _)| x).collect();

    // Column pairs, same rule.
    let total = alive.len() as i64;
    let mut dropped = vec![false; alive.len()];
    for i in 0..alive.len() {
        for j in i + 1..alive.len() {
            if dropped[i] || dropped[j] {
                continue;
            }
            let diff =
                alive.iter().filter(|&&x| t.value(x, alive[i]) != t.value(x, alive[j])).count();
            if Ratio::new(diff as i64, total) < floor {
                dropped[i] = true;
                dropped[j] = true;
            }
        }
    }
    let survivors: Vec<usize> =
        alive.drain(..).zip(&dropped).filter(|(_, &d)| !d).map(|(x, _)| x).collect();

    if survivors.is_empty() {
        return Err(DenseError::BadParams(
            "every index violated the balance conditions; nothing survives the discards".into(),
        ));
    }
    let rebuilt = TwoSourceFunction::from_fn(survivors.len(), survivors.len(), |x, y| {
        t.value(survivors[x - 1], survivors[y - 1])
    });
    let eps_qo = quasi_orthogonality_error(&rebuilt);
    Ok(MeasuredTable { table: rebuilt, eps_qo: Some(eps_qo), eps_nm: None, k: Some(k) })
}

/// Force every row and column weight to at least m = ceil(eps_prime * N)
/// by setting m cyclic shift matchings to 1: entry (z, z+i mod N) for
/// each shift i in 1..=m. Already-set entries stay set, so the pass is
/// idempotent.
pub fn enforce_linear_degrees(
    f: &TwoSourceFunction,
    eps_prime: f64,
) -> Result<MeasuredTable, DenseError> {
    if f.rows() != f.cols() {
        return Err(DenseError::BadParams(format!(
            "shift matchings need a square table, got {}x{}",
            f.rows(),
            f.cols()
        )));
    }
    let n = f.rows();
    if !(0.0..=1.0).contains(&eps_prime) {
        return Err(DenseError::BadParams(format!("weight fraction must be in [0,1], got {eps_prime}")));
    }
    let m = (eps_prime * n as f64).ceil() as usize;
    if m >= n {
        return Err(DenseError::BadParams(format!(
            "{m} shift matchings need m < N = {n} to stay off the diagonal"
        )));
    }
    let out = TwoSourceFunction::from_fn(n, n, |x, y| {
        f.value(x, y) || (1..=m).any(|i| (x - 1 + i) % n == y - 1)
    });
    for z in 1..=n {
        let row = (1..=n).filter(|&y| out.value(z, y)).count();
        let col = (1..=n).filter(|&x| out.value(x, z)).count();
        assert!(row >= m && col >= m, "each shift contributes one fresh unit per line");
    }
    Ok(MeasuredTable::from_table(out))
}
