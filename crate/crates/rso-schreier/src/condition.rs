use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use rso_graph::Graph;
use rso_verify::{
    directed_colored_robustness_adversarial, directed_colored_robustness_exact,
    expansion_combinatorial, expansion_sampled, ExpansionReport, RobustnessReport, VerifyError,
    EXACT_SCAN_LIMIT,
};

use crate::family::{primary_graph, secondary_graph, PermutationFamily};

/// Everything measured while checking the sufficient condition: if the
/// pair graph expands, the arc graph is robust (at least as robust as
/// the expansion), and the arc graph's underlying graph expands at
/// least min(1/4, expansion/3). `exact` reports whether every leg ran
/// as a full scan; only then are the implications hard-asserted.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SufficientConditionReport {
    pub secondary_expansion: ExpansionReport,
    pub primary_robustness: RobustnessReport,
    pub primary_expansion: ExpansionReport,
    pub exact: bool,
}

/// Full expansion scans stop here: 2^(n-1) subsets is the practical
/// ceiling for a desk check, and the SL2(5) pair graph (30 vertices)
/// sits right at it.
pub const EXPANSION_EXACT_LIMIT: usize = 30;

const EXPANSION_SAMPLES: u64 = 2_000;
const ADVERSARIAL_SAMPLES: u64 = 100_000;

fn underlying_of_primary(family: &PermutationFamily) -> Graph {
    let n = family.n();
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for p in family.perms() {
        for v in 1..=n as u32 {
            let w = p.apply(v);
            if v != w {
                edges.push((v.min(w), v.max(w)));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edges(n, edges).expect("images stay in range")
}

fn expansion_auto(g: &Graph, seed: u64) -> Result<(ExpansionReport, bool), VerifyError> {
    if g.n() <= EXPANSION_EXACT_LIMIT {
        Ok((expansion_combinatorial(g, EXPANSION_EXACT_LIMIT)?, true))
    } else {
        Ok((expansion_sampled(g, EXPANSION_SAMPLES, seed)?, false))
    }
}

/// Measure the premise and both conclusions of the sufficient condition
/// on one family: expansion of the pair graph, robustness of the arc
/// graph, expansion of the arc graph. Every leg runs exact when its
/// size allows and falls back to the seeded estimators otherwise; when
/// a conclusion and the premise are both exact the implication is
/// asserted outright, so a violation stops the program rather than
/// passing silently.
pub fn check_sufficient_condition(
    family: &PermutationFamily,
    seed: u64,
) -> Result<SufficientConditionReport, VerifyError> {
    let secondary = secondary_graph(family).underlying_simple();
    let (secondary_expansion, secondary_exact) = expansion_auto(&secondary, seed)?;

    let primary = primary_graph(family);
    let (primary_robustness, robust_exact) = if family.n() <= EXACT_SCAN_LIMIT {
        (directed_colored_robustness_exact(&primary, EXACT_SCAN_LIMIT)?, true)
    } else {
        (
            directed_colored_robustness_adversarial(&primary, &[], ADVERSARIAL_SAMPLES, seed)?,
            false,
        )
    };

    let (primary_expansion, prim_exp_exact) =
        expansion_auto(&underlying_of_primary(family), seed.wrapping_add(1))?;

    if secondary_exact {
        let gamma = secondary_expansion.gamma_combinatorial.expect("exact leg");
        if robust_exact {
            let rho = primary_robustness.gamma_exact.expect("exact leg");
            assert!(
                rho >= gamma,
                "arc-graph robustness {rho} fell below pair-graph expansion {gamma}"
            );
        }
        if prim_exp_exact {
            let h = primary_expansion.gamma_combinatorial.expect("exact leg");
            let floor = Ratio::new(1, 4).min(gamma / 3);
            assert!(
                h >= floor,
                "arc-graph expansion {h} fell below the guaranteed {floor}"
            );
        }
    }

    Ok(SufficientConditionReport {
        secondary_expansion,
        primary_robustness,
        primary_expansion,
        exact: secondary_exact && robust_exact && prim_exp_exact,
    })
}
