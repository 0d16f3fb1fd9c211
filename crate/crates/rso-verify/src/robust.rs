use num_rational::Ratio;

use rso_graph::{ColoredMultiGraph, DirectedColoredMultiGraph, Graph, Permutation};

use crate::report::{RobustnessReport, ScanMode, VerifyError};
use crate::scan::{adversarial_scan, min_scan};

/// Shared damage evaluator for all three graph flavors: how many edges
/// (as multiset elements keyed by normalized endpoints plus color) a
/// relabeling displaces. Plain graphs ride along with color 0.
///
/// Two evaluation paths with identical results: when the permutation
/// moves few vertices, only edges incident to moved vertices can change,
/// so the symmetric difference is computed on that sublist; otherwise
/// the whole edge list is remapped. The sublist argument is sound
/// because the moved-vertex set is closed under the permutation: an
/// edge's image touches a moved vertex iff the edge does.
pub(crate) struct EdgeKernel {
    edges: Vec<(u32, u32, u32)>,
    sorted: Vec<(u32, u32, u32)>,
    incident: Vec<Vec<u32>>,
    directed: bool,
}

impl EdgeKernel {
    fn build(n: usize, edges: Vec<(u32, u32, u32)>, directed: bool) -> EdgeKernel {
        let mut incident: Vec<Vec<u32>> = vec![Vec::new(); n];
        for (i, &(u, v, _)) in edges.iter().enumerate() {
            incident[u as usize - 1].push(i as u32);
            if u != v {
                incident[v as usize - 1].push(i as u32);
            }
        }
        let mut sorted = edges.clone();
        sorted.sort_unstable();
        EdgeKernel { edges, sorted, incident, directed }
    }

    pub fn plain(g: &Graph) -> EdgeKernel {
        EdgeKernel::build(
            g.n(),
            g.edges().iter().map(|&(u, v)| (u, v, 0)).collect(),
            false,
        )
    }

    pub fn colored(m: &ColoredMultiGraph) -> EdgeKernel {
        EdgeKernel::build(m.n(), m.edges().to_vec(), false)
    }

    pub fn directed(d: &DirectedColoredMultiGraph) -> EdgeKernel {
        EdgeKernel::build(d.n(), d.arcs().to_vec(), true)
    }

    #[inline]
    fn norm(&self, u: u32, v: u32, c: u32) -> (u32, u32, u32) {
        if self.directed || u <= v {
            (u, v, c)
        } else {
            (v, u, c)
        }
    }

    fn intersection(a: &[(u32, u32, u32)], b: &[(u32, u32, u32)]) -> usize {
        let (mut i, mut j, mut inter) = (0usize, 0usize, 0usize);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    inter += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        inter
    }

    pub fn damage(&self, images: &[u32]) -> usize {
        let moved: Vec<u32> =
            (0..images.len()).filter(|&i| images[i] != i as u32 + 1).map(|i| i as u32).collect();
        if moved.is_empty() {
            return 0;
        }
        let touched: usize = moved.iter().map(|&v| self.incident[v as usize].len()).sum();
        if touched * 4 < self.edges.len() {
            let mut idxs: Vec<u32> = Vec::with_capacity(touched);
            for &v in &moved {
                idxs.extend_from_slice(&self.incident[v as usize]);
            }
            idxs.sort_unstable();
            idxs.dedup();
            let mut a: Vec<(u32, u32, u32)> = Vec::with_capacity(idxs.len());
            let mut b: Vec<(u32, u32, u32)> = Vec::with_capacity(idxs.len());
            for &i in &idxs {
                let (u, v, c) = self.edges[i as usize];
                a.push(self.norm(u, v, c));
                b.push(self.norm(images[u as usize - 1], images[v as usize - 1], c));
            }
            a.sort_unstable();
            b.sort_unstable();
            a.len() + b.len() - 2 * EdgeKernel::intersection(&a, &b)
        } else {
            let mut b: Vec<(u32, u32, u32)> = self
                .edges
                .iter()
                .map(|&(u, v, c)| self.norm(images[u as usize - 1], images[v as usize - 1], c))
                .collect();
            b.sort_unstable();
            2 * (self.edges.len() - EdgeKernel::intersection(&self.sorted, &b))
        }
    }

    /// Robustness objective: displaced edges per moved vertex; None on
    /// the identity, which Def-style minima exclude.
    pub fn key(&self, images: &[u32]) -> Option<Ratio<i64>> {
        let moved = images.iter().enumerate().filter(|&(i, &v)| v != i as u32 + 1).count();
        if moved == 0 {
            return None;
        }
        Some(Ratio::new(self.damage(images) as i64, moved as i64))
    }
}

pub const EXACT_SCAN_LIMIT: usize = 9;

fn exact_common(
    kernel: &EdgeKernel,
    n: usize,
    n_limit: usize,
    threads: usize,
) -> Result<RobustnessReport, VerifyError> {
    if n > n_limit {
        return Err(VerifyError::TooLarge { n, limit: n_limit });
    }
    if n < 2 {
        return Err(VerifyError::Degenerate(format!(
            "no non-trivial permutations on {n} vertices"
        )));
    }
    let (found, examined) = min_scan(n, threads, &|im: &[u32]| kernel.key(im));
    let (gamma, witness) = found.expect("n >= 2 yields at least one non-trivial permutation");
    Ok(RobustnessReport {
        gamma_exact: Some(gamma),
        gamma_upper: gamma,
        witness,
        mode: ScanMode::Exact,
        permutations_examined: examined,
        seed: None,
    })
}

fn adversarial_common(
    kernel: &EdgeKernel,
    n: usize,
    families: &[Permutation],
    samples: u64,
    seed: u64,
) -> Result<RobustnessReport, VerifyError> {
    if n < 2 {
        return Err(VerifyError::Degenerate(format!(
            "no non-trivial permutations on {n} vertices"
        )));
    }
    let (found, examined) =
        adversarial_scan(n, families, samples, seed, &|im: &[u32]| kernel.key(im));
    let (gamma, witness) = found.expect("n >= 2 yields at least one transposition");
    Ok(RobustnessReport {
        gamma_exact: None,
        gamma_upper: gamma,
        witness,
        mode: ScanMode::AdversarialSampled,
        permutations_examined: examined,
        seed: Some(seed),
    })
}

/// Exact robustness: minimum over every non-trivial permutation of
/// displaced edges per moved vertex. Factorial scan, hence the limit.
pub fn robustness_exact(g: &Graph, n_limit: usize) -> Result<RobustnessReport, VerifyError> {
    exact_common(&EdgeKernel::plain(g), g.n(), n_limit, 1)
}

/// Same scan split across threads by the image of vertex 1; the report
/// is identical for every thread count.
pub fn robustness_exact_threaded(
    g: &Graph,
    n_limit: usize,
    threads: usize,
) -> Result<RobustnessReport, VerifyError> {
    exact_common(&EdgeKernel::plain(g), g.n(), n_limit, threads)
}

pub fn colored_robustness_exact(
    m: &ColoredMultiGraph,
    n_limit: usize,
) -> Result<RobustnessReport, VerifyError> {
    exact_common(&EdgeKernel::colored(m), m.n(), n_limit, 1)
}

pub fn colored_robustness_exact_threaded(
    m: &ColoredMultiGraph,
    n_limit: usize,
    threads: usize,
) -> Result<RobustnessReport, VerifyError> {
    exact_common(&EdgeKernel::colored(m), m.n(), n_limit, threads)
}

pub fn directed_colored_robustness_exact(
    d: &DirectedColoredMultiGraph,
    n_limit: usize,
) -> Result<RobustnessReport, VerifyError> {
    exact_common(&EdgeKernel::directed(d), d.n(), n_limit, 1)
}

/// Upper-bound estimator: best attack found among transpositions,
/// 3-cycles, caller families (block swaps and the like), and seeded
/// uniform permutations. gamma_upper bounds the true robustness from
/// above; it proves nothing below it.
pub fn robustness_adversarial(
    g: &Graph,
    families: &[Permutation],
    samples: u64,
    seed: u64,
) -> Result<RobustnessReport, VerifyError> {
    adversarial_common(&EdgeKernel::plain(g), g.n(), families, samples, seed)
}

pub fn colored_robustness_adversarial(
    m: &ColoredMultiGraph,
    families: &[Permutation],
    samples: u64,
    seed: u64,
) -> Result<RobustnessReport, VerifyError> {
    adversarial_common(&EdgeKernel::colored(m), m.n(), families, samples, seed)
}

pub fn directed_colored_robustness_adversarial(
    d: &DirectedColoredMultiGraph,
    families: &[Permutation],
    samples: u64,
    seed: u64,
) -> Result<RobustnessReport, VerifyError> {
    adversarial_common(&EdgeKernel::directed(d), d.n(), families, samples, seed)
}
