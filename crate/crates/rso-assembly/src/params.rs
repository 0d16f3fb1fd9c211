use serde::{Deserialize, Serialize};

use rso_graph::{Graph, Permutation};
use rso_perms::{code_based_perm, greedy_far_collection, perm_distance, BinaryCode};
use rso_verify::is_self_ordered;

use crate::error::AssemblyError;

/// Where the per-component matchings come from: a greedy far-apart
/// collection grown from seeded candidates, or a binary code whose i-th
/// codeword toggles disjoint transpositions (the locally computable
/// variant; this is the only source the local neighbor oracle accepts).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum PermSource {
    Greedy { delta: f64, budget: usize },
    Code(BinaryCode),
}

/// Everything the component assembly needs, validated once: two
/// asymmetric base graphs on [ell] whose degree ranges leave a gap (the
/// first tops out at d', the second starts at d' + 1, so the two halves
/// of a component are separable by degree), and one matching
/// permutation per component, pairwise far apart.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ThreeStepParams {
    n: usize,
    ell: usize,
    d_prime: usize,
    g1: Graph,
    g2: Graph,
    source: PermSource,
    seed: u64,
    perms: Vec<Permutation>,
    /// Oracle-query allowance for one local ordering call; component
    /// retrieval needs exactly 2*ell queries, the rest is slack.
    pub query_budget: u64,
}

impl ThreeStepParams {
    pub fn new(
        n: usize,
        ell: usize,
        d_prime: usize,
        g1: Graph,
        g2: Graph,
        source: PermSource,
        seed: u64,
    ) -> Result<ThreeStepParams, AssemblyError> {
        if ell == 0 || n == 0 || n % (2 * ell) != 0 {
            return Err(AssemblyError::NotDivisible { n, span: 2 * ell });
        }
        if g1.n() != ell || g2.n() != ell {
            return Err(AssemblyError::BadParams(format!(
                "base graphs must live on [{ell}], got {} and {}",
                g1.n(),
                g2.n()
            )));
        }
        if g1.max_degree() > d_prime || g2.min_degree() < d_prime + 1 {
            return Err(AssemblyError::BadParams(format!(
                "degree gap violated: first side tops at {} (cap {d_prime}), second side bottoms at {} (floor {})",
                g1.max_degree(),
                g2.min_degree(),
                d_prime + 1
            )));
        }
        if !g1.is_connected() {
            return Err(AssemblyError::BadParams(
                "first base graph must be connected so component retrieval terminates".into(),
            ));
        }
        if !is_self_ordered(&g1) || !is_self_ordered(&g2) {
            return Err(AssemblyError::BadParams(
                "base graphs must be asymmetric".into(),
            ));
        }
        let m = n / (2 * ell);
        let perms = match &source {
            PermSource::Greedy { delta, budget } => {
                greedy_far_collection(ell, m, *delta, seed, *budget)?
            }
            PermSource::Code(code) => {
                if 2 * code.l != ell {
                    return Err(AssemblyError::BadParams(format!(
                        "code block length {} spans {} vertices, components need {ell}",
                        code.l,
                        2 * code.l
                    )));
                }
                if m > code.codewords() {
                    return Err(AssemblyError::BadParams(format!(
                        "{m} components but only {} codewords",
                        code.codewords()
                    )));
                }
                let perms: Vec<Permutation> =
                    (1..=m).map(|i| code_based_perm(code, i)).collect();
                if m <= 64 && code.verified {
                    for i in 0..m {
                        for j in i + 1..m {
                            assert!(
                                perm_distance(&perms[i], &perms[j]) >= 2 * code.min_distance,
                                "code distance bound broken between messages {} and {}",
                                i + 1,
                                j + 1
                            );
                        }
                    }
                }
                perms
            }
        };
        Ok(ThreeStepParams {
            n,
            ell,
            d_prime,
            g1,
            g2,
            source,
            seed,
            perms,
            query_budget: 8 * ell as u64,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn d_prime(&self) -> usize {
        self.d_prime
    }

    pub fn g1(&self) -> &Graph {
        &self.g1
    }

    pub fn g2(&self) -> &Graph {
        &self.g2
    }

    pub fn source(&self) -> &PermSource {
        &self.source
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// One matching permutation per component.
    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn components(&self) -> usize {
        self.n / (2 * self.ell)
    }
}

/// One connected component: the first base graph on 1..=ell, the second
/// shifted to ell+1..=2*ell, and the matching v -- ell + pi(v) tying
/// the halves together.
pub fn component_graph(
    g1: &Graph,
    g2: &Graph,
    pi: &Permutation,
) -> Result<Graph, AssemblyError> {
    let ell = g1.n();
    if g2.n() != ell || pi.n() != ell {
        return Err(AssemblyError::BadParams(format!(
            "component pieces disagree on size: {} / {} / {}",
            ell,
            g2.n(),
            pi.n()
        )));
    }
    let shift = ell as u32;
    let mut edges: Vec<(u32, u32)> = g1.edges().to_vec();
    edges.extend(g2.edges().iter().map(|&(u, v)| (u + shift, v + shift)));
    edges.extend((1..=shift).map(|v| (v, shift + pi.apply(v))));
    Ok(Graph::from_edges(2 * ell, edges)?)
}

/// The assembled graph: component i occupies the vertex block
/// (i-1)*2*ell+1 ..= i*2*ell and uses the i-th matching permutation.
pub fn assemble(params: &ThreeStepParams) -> Result<Graph, AssemblyError> {
    let span = 2 * params.ell as u32;
    let mut edges = Vec::new();
    for (i, pi) in params.perms.iter().enumerate() {
        let block = i as u32 * span;
        let comp = component_graph(&params.g1, &params.g2, pi)?;
        edges.extend(comp.edges().iter().map(|&(u, v)| (u + block, v + block)));
    }
    Ok(Graph::from_edges(params.n, edges)?)
}
