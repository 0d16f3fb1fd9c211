use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use rso_graph::{apply_permutation, Graph, Permutation};

use crate::error::DenseError;

fn binom(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut out = 1u128;
    for i in 0..k {
        out = out * (n - i) as u128 / (i + 1) as u128;
    }
    out
}

/// k-th size-h subset of 1..=l in lexicographic order, 0-based rank.
fn subset_unrank(l: usize, h: usize, mut rank: u128) -> Vec<u32> {
    let mut out = Vec::with_capacity(h);
    let mut next = 1u32;
    let mut remaining = h;
    while remaining > 0 {
        let starting_here = binom((l as u32 - next) as u64, (remaining - 1) as u64);
        if rank < starting_here {
            out.push(next);
            remaining -= 1;
        } else {
            rank -= starting_here;
        }
        next += 1;
    }
    out
}

/// Inverse of subset_unrank; `subset` must be ascending.
fn subset_rank(l: usize, subset: &[u32]) -> u128 {
    let mut rank = 0u128;
    let mut prev = 0u32;
    for (i, &c) in subset.iter().enumerate() {
        for v in prev + 1..c {
            rank += binom((l as u32 - v) as u64, (subset.len() - i - 1) as u64);
        }
        prev = c;
    }
    rank
}

/// 0-based lexicographic rank of the pair (a, b), 1 <= a < b <= s.
fn pair_rank(s: usize, a: usize, b: usize) -> usize {
    (a - 1) * s - a * (a - 1) / 2 + (b - a - 1)
}

fn pair_unrank(s: usize, mut rank: usize) -> (u32, u32) {
    let mut a = 1usize;
    loop {
        let block = s - a;
        if rank < block {
            return (a as u32, (a + 1 + rank) as u32);
        }
        rank -= block;
        a += 1;
    }
}

/// First q distinct pairs on 0..r taken stride by stride: all pairs at
/// circular distance 1, then 2, and so on. Each full stride class
/// touches every point twice, so q <= 4r keeps every point at eight
/// pairs or fewer.
fn circulant_pairs(r: usize, q: usize) -> Result<Vec<(u32, u32)>, DenseError> {
    let mut out = Vec::with_capacity(q);
    let mut seen = HashSet::new();
    let mut d = 1usize;
    while out.len() < q {
        if d > r / 2 {
            return Err(DenseError::Infeasible(format!(
                "only {} distinct stride pairs exist on {r} points, {q} needed",
                out.len()
            )));
        }
        for a in 0..r {
            let b = (a + d) % r;
            let key = (a.min(b) as u32, a.max(b) as u32);
            if seen.insert(key) {
                out.push(key);
                if out.len() == q {
                    break;
                }
            }
        }
        d += 1;
    }
    Ok(out)
}

/// A 5m-vertex graph with a designated anchor layout, plus the numbers
/// needed to undo a relabeling: the small side occupies 1..=m, the
/// anchor set the first s of those, and the anchor-pair block the first
/// ell = C(s,2) vertices of the large side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EsoGraph {
    pub graph: Graph,
    pub m: usize,
    pub s: usize,
    pub ell: usize,
}

impl EsoGraph {
    /// Subset size used for the small-side tail signatures.
    pub fn h(&self) -> usize {
        self.ell.div_ceil(2)
    }
}

/// Wire a small graph on m vertices and a large one on 4m into a single
/// graph whose ordering can be recovered from scratch. Anchors: vertex
/// j of the large side (j <= ell) joins the j-th pair of the s anchor
/// vertices; every further small-side vertex joins its own size-h subset
/// of those pair vertices; every further large-side vertex joins its own
/// stride pair of tail vertices, at most eight pairs per tail vertex.
/// The two capacity conditions are checked up front and named on
/// failure.
pub fn efficient_so_graph(g1: &Graph, g2: &Graph, s: usize) -> Result<EsoGraph, DenseError> {
    let m = g1.n();
    if g2.n() != 4 * m {
        return Err(DenseError::BadParams(format!(
            "the large side must hold exactly 4m = {} vertices, got {}",
            4 * m,
            g2.n()
        )));
    }
    if s < 2 || s >= m {
        return Err(DenseError::BadParams(format!(
            "the anchor count must satisfy 2 <= s < m, got s = {s}, m = {m}"
        )));
    }
    let ell = s * (s - 1) / 2;
    let r = m - s;
    if ell > 4 * m {
        return Err(DenseError::Infeasible(format!(
            "anchor pairs C(s,2) = {ell} do not fit in the large side 4m = {}",
            4 * m
        )));
    }
    let q = 4 * m - ell;
    let h = ell.div_ceil(2);
    let capacity = binom(ell as u64, h as u64);
    if capacity < r as u128 {
        return Err(DenseError::Infeasible(format!(
            "subset capacity C({ell},{h}) = {capacity} is below m - s = {r}"
        )));
    }
    if 2 * q > 8 * r {
        return Err(DenseError::Infeasible(format!(
            "degree cap 2*(4m - l) <= 8*(m - s) fails: {} > {}",
            2 * q,
            8 * r
        )));
    }

    let mut edges: Vec<(u32, u32)> = g1.edges().to_vec();
    let shift = m as u32;
    edges.extend(g2.edges().iter().map(|&(u, v)| (u + shift, v + shift)));
    for j in 1..=ell {
        let (a, b) = pair_unrank(s, j - 1);
        edges.push((a, shift + j as u32));
        edges.push((b, shift + j as u32));
    }
    for k in 1..=r {
        for c in subset_unrank(ell, h, (k - 1) as u128) {
            edges.push(((s + k) as u32, shift + c));
        }
    }
    let tail_pairs = circulant_pairs(r, q)?;
    let mut uses = vec![0usize; r];
    for (t, &(a, b)) in tail_pairs.iter().enumerate() {
        uses[a as usize] += 1;
        uses[b as usize] += 1;
        edges.push(((s + 1) as u32 + a, (m + ell + 1 + t) as u32));
        edges.push(((s + 1) as u32 + b, (m + ell + 1 + t) as u32));
    }
    if let Some(over) = uses.iter().position(|&c| c > 8) {
        return Err(DenseError::Infeasible(format!(
            "tail vertex {} would host {} pairs; eight is the cap",
            s + 1 + over,
            uses[over]
        )));
    }
    let graph = Graph::from_edges(5 * m, edges)?;
    Ok(EsoGraph { graph, m, s, ell })
}

fn scan_arrangements(n: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    fn rec(
        n: usize,
        cur: &mut Vec<usize>,
        used: &mut [bool],
        f: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        if cur.len() == n {
            return f(cur);
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                if rec(n, cur, used, f) {
                    return true;
                }
                cur.pop();
                used[v] = false;
            }
        }
        false
    }
    rec(n, &mut Vec::with_capacity(n), &mut vec![false; n], f)
}

/// Undo an unknown relabeling of a built graph. The sides split by
/// degree; the anchors are the small-side vertices with notably few
/// cross neighbors; each arrangement of the anchors (at most s! of
/// them, scanned in order) induces positions for the pair block, then
/// for the small-side tail via subset ranks, and is accepted only if
/// the relabeled graph matches the built one edge for edge. Inputs that
/// fit no arrangement are rejected.
pub fn recover_ordering(gp: &Graph, eso: &EsoGraph) -> Result<Permutation, DenseError> {
    let (m, s, ell) = (eso.m, eso.s, eso.ell);
    if gp.n() != 5 * m {
        return Err(DenseError::BadParams(format!(
            "expected a graph on 5m = {} vertices, got {}",
            5 * m,
            gp.n()
        )));
    }
    if s > 10 {
        return Err(DenseError::BadParams(format!(
            "the arrangement scan grows factorially; s = {s} anchors are out of range"
        )));
    }
    let h = eso.h();
    let r = m - s;
    let q = 4 * m - ell;
    let n = 5 * m;

    // Side split: the m lowest degrees must sit strictly below the rest.
    let degrees = gp.degrees();
    let mut by_degree: Vec<u32> = (1..=n as u32).collect();
    by_degree.sort_by_key(|&v| (degrees[v as usize - 1], v));
    let low_max = degrees[by_degree[m - 1] as usize - 1];
    let high_min = degrees[by_degree[m] as usize - 1];
    if low_max >= high_min {
        return Err(DenseError::Rejected(format!(
            "the sides do not separate by degree: {low_max} meets {high_min}"
        )));
    }
    let mut is_low = vec![false; n + 1];
    for &v in &by_degree[..m] {
        is_low[v as usize] = true;
    }

    let adj = gp.adjacency();
    let nbrs = |v: u32| -> &[u32] { &adj[v as usize - 1] };

    // Anchors: low vertices with fewer cross edges than any tail vertex.
    let mut s1_sorted = Vec::new();
    for &v in by_degree[..m].iter() {
        let cross = nbrs(v).iter().filter(|&&w| !is_low[w as usize]).count();
        if cross < h {
            s1_sorted.push(v);
        }
    }
    s1_sorted.sort_unstable();
    if s1_sorted.len() != s {
        return Err(DenseError::Rejected(format!(
            "{} vertices carry an anchor signature, expected {s}",
            s1_sorted.len()
        )));
    }
    let mut s1_idx = vec![usize::MAX; n + 1];
    for (i, &v) in s1_sorted.iter().enumerate() {
        s1_idx[v as usize] = i;
    }

    // Pair block: the high vertices touching the anchors, two apiece.
    let mut s2_found = Vec::new();
    let mut is_s2 = vec![false; n + 1];
    for v in 1..=n as u32 {
        if is_low[v as usize] {
            continue;
        }
        let into_s1: Vec<usize> = nbrs(v)
            .iter()
            .filter(|&&w| s1_idx[w as usize] != usize::MAX)
            .map(|&w| s1_idx[w as usize])
            .collect();
        if into_s1.is_empty() {
            continue;
        }
        if into_s1.len() != 2 {
            return Err(DenseError::Rejected(format!(
                "vertex {v} touches {} anchors; pair vertices touch exactly two",
                into_s1.len()
            )));
        }
        s2_found.push((v, into_s1[0], into_s1[1]));
        is_s2[v as usize] = true;
    }
    if s2_found.len() != ell {
        return Err(DenseError::Rejected(format!(
            "{} pair vertices found, expected {ell}",
            s2_found.len()
        )));
    }
    let mut s2_idx = vec![usize::MAX; n + 1];
    for (i, &(v, _, _)) in s2_found.iter().enumerate() {
        s2_idx[v as usize] = i;
    }

    // Tails, with their sigma-independent counts checked once.
    let mut r1_found = Vec::new();
    let mut r1_subsets = Vec::new();
    for &v in by_degree[..m].iter() {
        if s1_idx[v as usize] != usize::MAX {
            continue;
        }
        let subset: Vec<usize> = nbrs(v)
            .iter()
            .filter(|&&w| s2_idx[w as usize] != usize::MAX)
            .map(|&w| s2_idx[w as usize])
            .collect();
        if subset.len() != h {
            return Err(DenseError::Rejected(format!(
                "vertex {v} touches {} pair vertices, tail signatures have {h}",
                subset.len()
            )));
        }
        r1_found.push(v);
        r1_subsets.push(subset);
    }
    let mut r2_found = Vec::new();
    for v in 1..=n as u32 {
        if is_low[v as usize] || is_s2[v as usize] {
            continue;
        }
        let into_low: Vec<u32> =
            nbrs(v).iter().copied().filter(|&w| is_low[w as usize]).collect();
        if into_low.len() != 2 {
            return Err(DenseError::Rejected(format!(
                "vertex {v} touches {} small-side vertices, expected a pair",
                into_low.len()
            )));
        }
        r2_found.push((v, into_low[0], into_low[1]));
    }
    debug_assert_eq!(r2_found.len(), q);

    let g1_labels: Vec<u32> = (1..=m as u32).collect();
    let g1_target = eso.graph.induced(&g1_labels);
    let gp_low_edges: Vec<(u32, u32)> = gp
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| is_low[u as usize] && is_low[v as usize])
        .collect();
    let circ_rank: HashMap<(u32, u32), usize> = circulant_pairs(r, q)?
        .into_iter()
        .enumerate()
        .map(|(t, p)| (p, t))
        .collect();

    let mut answer: Option<Permutation> = None;
    scan_arrangements(s, &mut |sigma| {
        // Place the pair block off this arrangement; ranks collide only
        // on malformed inputs.
        let mut s2_pos = vec![usize::MAX; ell];
        let mut slot_taken = vec![false; ell];
        for (wi, &(_, i1, i2)) in s2_found.iter().enumerate() {
            let (a, b) = (sigma[i1].min(sigma[i2]), sigma[i1].max(sigma[i2]));
            let rank = pair_rank(s, a + 1, b + 1);
            if slot_taken[rank] {
                return false;
            }
            slot_taken[rank] = true;
            s2_pos[wi] = rank;
        }
        // Tail ranks must land inside 0..r, each exactly once; a wrong
        // arrangement scatters them across the full binomial range.
        let mut r1_at = vec![u32::MAX; r];
        for (ui, subset) in r1_subsets.iter().enumerate() {
            let mut positions: Vec<u32> =
                subset.iter().map(|&si| s2_pos[si] as u32 + 1).collect();
            positions.sort_unstable();
            let rank = subset_rank(ell, &positions);
            if rank >= r as u128 || r1_at[rank as usize] != u32::MAX {
                return false;
            }
            r1_at[rank as usize] = r1_found[ui];
        }
        let mut pos = vec![0u32; n + 1];
        for (i, &v) in s1_sorted.iter().enumerate() {
            pos[v as usize] = sigma[i] as u32 + 1;
        }
        for (slot, &v) in r1_at.iter().enumerate() {
            pos[v as usize] = (s + 1 + slot) as u32;
        }
        let mut mapped: Vec<(u32, u32)> = gp_low_edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (pos[u as usize], pos[v as usize]);
                (a.min(b), a.max(b))
            })
            .collect();
        mapped.sort_unstable();
        if mapped != g1_target.edges() {
            return false;
        }
        for (wi, &(_, _, _)) in s2_found.iter().enumerate() {
            let v = s2_found[wi].0;
            pos[v as usize] = (m + 1 + s2_pos[wi]) as u32;
        }
        for &(v, u1, u2) in &r2_found {
            let (p1, p2) = (pos[u1 as usize], pos[u2 as usize]);
            let (a, b) = (p1.min(p2) - s as u32 - 1, p1.max(p2) - s as u32 - 1);
            match circ_rank.get(&(a, b)) {
                Some(&t) => pos[v as usize] = (m + ell + 1 + t) as u32,
                None => return false,
            }
        }
        let images: Vec<u32> = (1..=n as u32).map(|v| pos[v as usize]).collect();
        let phi = match Permutation::from_images(images) {
            Ok(p) => p,
            Err(_) => return false,
        };
        if apply_permutation(gp, &phi) == eso.graph {
            answer = Some(phi);
            true
        } else {
            false
        }
    });
    answer.ok_or_else(|| {
        DenseError::Rejected(
            "no arrangement of the anchor set reproduces the built graph".into(),
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_ranks_round_trip() {
        let l = 9;
        let h = 4;
        let total = binom(l as u64, h as u64);
        for rank in 0..total {
            let subset = subset_unrank(l, h, rank);
            assert_eq!(subset.len(), h);
            assert!(subset.windows(2).all(|w| w[0] < w[1]));
            assert!(*subset.last().unwrap() <= l as u32);
            assert_eq!(subset_rank(l, &subset), rank);
        }
        assert_eq!(subset_unrank(l, h, 0), vec![1, 2, 3, 4]);
    }

    #[test]
    fn pair_ranks_round_trip() {
        let s = 9;
        for rank in 0..s * (s - 1) / 2 {
            let (a, b) = pair_unrank(s, rank);
            assert!(a < b && b as usize <= s);
            assert_eq!(pair_rank(s, a as usize, b as usize), rank);
        }
        assert_eq!(pair_unrank(s, 0), (1, 2));
        assert_eq!(pair_unrank(s, 8), (2, 3));
    }

    #[test]
    fn stride_pairs_stay_distinct_and_spread() {
        let pairs = circulant_pairs(91, 364).unwrap();
        let distinct: HashSet<_> = pairs.iter().collect();
        assert_eq!(distinct.len(), 364);
        let mut uses = vec![0usize; 91];
        for &(a, b) in &pairs {
            uses[a as usize] += 1;
            uses[b as usize] += 1;
        }
        assert!(uses.iter().all(|&c| c == 8), "4 full strides touch each point 8 times");
        assert!(circulant_pairs(8, 32).is_err(), "8 points cannot host 32 distinct strides");
    }
}
