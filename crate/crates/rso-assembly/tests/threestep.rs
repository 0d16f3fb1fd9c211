use std::collections::BTreeSet;

use num_rational::Ratio;

use rso_assembly::*;
use rso_graph::{apply_permutation, Graph, Permutation};
use rso_perms::make_small_code;
use rso_transform::{disjoint_union_with_cross, make_regular_expanding};
use rso_verify::{is_isomorphic, is_self_ordered, robustness_adversarial, robustness_exact};

fn base_pair_8_3() -> (Graph, Graph) {
    find_base_pair(8, 3, 11, 200_000).unwrap()
}

fn greedy_params(n: usize) -> ThreeStepParams {
    let (g1, g2) = base_pair_8_3();
    ThreeStepParams::new(
        n,
        8,
        3,
        g1,
        g2,
        PermSource::Greedy { delta: 0.25, budget: 100_000 },
        11,
    )
    .unwrap()
}

fn code_params() -> ThreeStepParams {
    let code = make_small_code(2, 0.25, 5).unwrap();
    assert_eq!(code.l, 8, "rate 0.25 at k=2 pads the word to 8 bits");
    let ell = 2 * code.l;
    let (g1, g2) = find_base_pair(ell, 3, 11, 400_000).unwrap();
    ThreeStepParams::new(2 * ell * 2, ell, 3, g1, g2, PermSource::Code(code), 11).unwrap()
}

#[test]
fn two_cycle_shape_and_determinism() {
    let g = two_cycle_matching_graph(4, 1, 7).unwrap();
    assert_eq!(g.n(), 8);
    assert_eq!(g.edge_count(), 12);
    assert!(g.degrees().iter().all(|&d| d == 3), "cycle slots plus one matching each");
    assert_eq!(g.edges(), two_cycle_matching_graph(4, 1, 7).unwrap().edges());
    assert_ne!(
        two_cycle_matching_graph(5, 2, 1).unwrap().edges(),
        two_cycle_matching_graph(5, 2, 2).unwrap().edges(),
        "different seeds should draw different matchings"
    );

    let g = two_cycle_matching_graph(3, 2, 42).unwrap();
    assert_eq!(g.edge_count(), 2 * 3 + 2 * 3);
    let by_color = |c: u32| -> BTreeSet<(u32, u32)> {
        g.edges().iter().filter(|e| e.2 == c).map(|&(u, v, _)| (u.min(v), u.max(v))).collect()
    };
    assert_eq!(by_color(1), BTreeSet::from([(1, 2), (2, 3), (1, 3)]));
    assert_eq!(by_color(2), BTreeSet::from([(4, 5), (5, 6), (4, 6)]));
    for c in [3, 4] {
        let m = by_color(c);
        assert_eq!(m.len(), 3);
        let left: BTreeSet<u32> = m.iter().map(|&(u, _)| u).collect();
        let right: BTreeSet<u32> = m.iter().map(|&(_, v)| v).collect();
        assert_eq!(left, BTreeSet::from([1, 2, 3]), "matching color {c} covers the first cycle");
        assert_eq!(right, BTreeSet::from([4, 5, 6]), "matching color {c} covers the second cycle");
    }
}

#[test]
fn two_cycle_rejects_degenerate_cycles() {
    assert!(matches!(
        two_cycle_matching_graph(2, 1, 7),
        Err(AssemblyError::BadParams(_))
    ));
}

#[test]
fn small_search_certifies_robustness() {
    let (g, rep) = find_rso_small(7, None, 11, 200_000, true).unwrap();
    assert_eq!(g.n(), 7);
    assert_eq!(g.edge_count(), 12);
    assert_eq!(rep.gamma_exact, Some(Ratio::new(1, 2)));
    assert!(is_self_ordered(&g));

    let (again, _) = find_rso_small(7, None, 11, 200_000, true).unwrap();
    assert_eq!(g.edges(), again.edges(), "same seed, same graph");

    let (sampled, rep) = find_rso_small(7, None, 11, 200_000, false).unwrap();
    assert_eq!(sampled.edges(), g.edges());
    assert!(rep.gamma_exact.is_none());
    assert!(rep.gamma_upper > Ratio::new(0, 1));
}

#[test]
fn small_search_reports_exhaustion() {
    // The only 3-regular graph on 4 vertices is complete, and complete
    // graphs have every symmetry, so this search can never succeed.
    let err = find_rso_small(4, Some(3), 11, 50, true).unwrap_err();
    assert!(matches!(err, AssemblyError::SearchExhausted { .. }));
}

#[test]
fn base_pair_splits_by_degree() {
    let (g1, g2) = base_pair_8_3();
    assert_eq!(g1.n(), 8);
    assert_eq!(g2.n(), 8);
    assert_eq!(g1.max_degree(), 3);
    assert!(g1.is_connected());
    assert!(g2.min_degree() >= 4, "second half must clear the first by two");
    assert!(is_self_ordered(&g1));
    assert!(is_self_ordered(&g2));
    assert_eq!((g1.edge_count(), g2.edge_count()), (9, 18));

    // Too few vertices to fit a degree gap at all.
    assert!(matches!(
        find_base_pair(6, 3, 11, 1_000),
        Err(AssemblyError::BadParams(_))
    ));
}

#[test]
fn component_shape_and_counts() {
    let params = greedy_params(32);
    let pi = &params.perms()[0];
    let comp = component_graph(params.g1(), params.g2(), pi).unwrap();
    assert_eq!(comp.n(), 16);
    assert_eq!(
        comp.edge_count(),
        params.g1().edge_count() + params.g2().edge_count() + 8
    );
    assert!(comp.is_connected());
    for v in 1..=8u32 {
        assert!(comp.degree(v) <= 4, "first half stays at the sparse degree");
        assert!(comp.degree(v + 8) >= 5, "second half stays above it");
    }
    // Exactly one matching edge per first-half vertex.
    for v in 1..=8u32 {
        let cross = comp.neighbors(v).iter().filter(|&&w| w > 8).count();
        assert_eq!(cross, 1);
    }
}

#[test]
fn assembly_counts_components_and_keeps_them_distinct() {
    let params = greedy_params(32);
    let g = assemble(&params).unwrap();
    assert_eq!(g.n(), 32);
    assert_eq!(g.edge_count(), 70);

    let comps = g.connected_components();
    assert_eq!(comps.len(), 2);
    let blocks: Vec<Graph> = comps
        .iter()
        .map(|c| {
            assert_eq!(c.len(), 16);
            g.induced(c)
        })
        .collect();
    assert!(
        !is_isomorphic(&blocks[0], &blocks[1]),
        "different matchings must leave the copies distinguishable"
    );
    for v in 1..=32u32 {
        let within = (v - 1) % 16 + 1;
        if within <= 8 {
            assert!(g.degree(v) <= 4);
        } else {
            assert!(g.degree(v) >= 5);
        }
    }

    // A single-component instance is fine too.
    let single = greedy_params(16);
    assert_eq!(assemble(&single).unwrap().connected_components().len(), 1);
}

#[test]
fn assembly_rejects_misaligned_sizes() {
    let (g1, g2) = base_pair_8_3();
    let err = ThreeStepParams::new(
        20,
        8,
        3,
        g1,
        g2,
        PermSource::Greedy { delta: 0.25, budget: 100_000 },
        11,
    )
    .unwrap_err();
    assert!(matches!(err, AssemblyError::NotDivisible { n: 20, span: 16 }));
}

#[test]
fn params_validation_rejects_symmetric_or_gapless_bases() {
    let (g1, g2) = base_pair_8_3();

    // The 3-cube is 3-regular and connected but has plenty of
    // symmetries, so it cannot anchor an ordering.
    let cube = Graph::from_edges(
        8,
        vec![
            (1, 2), (2, 3), (3, 4), (1, 4),
            (5, 6), (6, 7), (7, 8), (5, 8),
            (1, 5), (2, 6), (3, 7), (4, 8),
        ],
    )
    .unwrap();
    let err = ThreeStepParams::new(
        32,
        8,
        3,
        cube,
        g2.clone(),
        PermSource::Greedy { delta: 0.25, budget: 100_000 },
        11,
    )
    .unwrap_err();
    assert!(matches!(err, AssemblyError::BadParams(_)));

    // Demanding a gap at degree 4 that the dense side cannot clear.
    let err = ThreeStepParams::new(
        32,
        8,
        4,
        g1,
        g2,
        PermSource::Greedy { delta: 0.25, budget: 100_000 },
        11,
    )
    .unwrap_err();
    assert!(matches!(err, AssemblyError::BadParams(_)));
}

#[test]
fn code_sourced_neighborhoods_match_the_assembled_graph() {
    let params = code_params();
    let g = assemble(&params).unwrap();
    assert_eq!(g.n(), 64);
    for v in 1..=64u32 {
        assert_eq!(
            local_neighbors(&params, v).unwrap(),
            g.neighbors(v),
            "direct neighborhood of {v} must match the materialized graph"
        );
        assert_eq!(local_neighbors(&params, v).unwrap(), local_neighbors(&params, v).unwrap());
    }
    assert!(matches!(
        local_neighbors(&params, 65),
        Err(AssemblyError::BadParams(_))
    ));

    // Greedy permutations have no index arithmetic to expand locally.
    let greedy = greedy_params(32);
    assert!(matches!(
        local_neighbors(&greedy, 1),
        Err(AssemblyError::BadParams(_))
    ));
}

#[test]
fn ordering_recovers_positions_from_any_relabeling() {
    let params = code_params();
    let g = assemble(&params).unwrap();

    let identity = LocalGraphOracle::of_graph(&g);
    let order = local_self_order(&identity, &params).unwrap();
    for v in 1..=64u32 {
        let before = identity.queries_used();
        assert_eq!(order.apply(v).unwrap(), v, "canonical labeling orders itself");
        assert_eq!(
            identity.queries_used() - before,
            32,
            "one neighborhood probe per component vertex"
        );
    }

    let mu = rso_perms::seeded::random_permutation(&mut rso_perms::seeded::rng_from_seed(33), 64);
    let scrambled = LocalGraphOracle::relabeled(&g, &mu);
    let order = local_self_order(&scrambled, &params).unwrap();
    let inv = mu.inverse();
    for v in 1..=64u32 {
        assert_eq!(
            order.apply(v).unwrap(),
            inv.apply(v),
            "position of {v} under the relabeling"
        );
    }
}

#[test]
fn ordering_rejects_rogue_components() {
    let params = code_params();
    let code = match params.source() {
        PermSource::Code(c) => c.clone(),
        _ => unreachable!(),
    };

    // A graph of the right size whose components carry codewords 3 and
    // 4: every component is locally plausible, but no position decodes.
    let imp1 = component_graph(params.g1(), params.g2(), &rso_perms::code_based_perm(&code, 3)).unwrap();
    let imp2 = component_graph(params.g1(), params.g2(), &rso_perms::code_based_perm(&code, 4)).unwrap();
    let impostor = disjoint_union_with_cross(&imp1, &imp2, &[]).unwrap();
    let oracle = LocalGraphOracle::of_graph(&impostor);
    let order = local_self_order(&oracle, &params).unwrap();
    for v in [1u32, 40] {
        assert!(matches!(
            order.apply(v),
            Err(AssemblyError::MalformedComponent(_))
        ));
    }

    // A complete component has no degree gap to split on.
    let mut clique_edges = Vec::new();
    for u in 1..=32u32 {
        for v in u + 1..=32u32 {
            clique_edges.push((u, v));
        }
    }
    let clique = Graph::from_edges(32, clique_edges).unwrap();
    let real = component_graph(params.g1(), params.g2(), &params.perms()[1]).unwrap();
    let half_fake = disjoint_union_with_cross(&clique, &real, &[]).unwrap();
    let oracle = LocalGraphOracle::of_graph(&half_fake);
    let order = local_self_order(&oracle, &params).unwrap();
    assert!(matches!(
        order.apply(1),
        Err(AssemblyError::MalformedComponent(_))
    ));
}

#[test]
fn assembled_robustness_battery() {
    let params = greedy_params(48);
    let g = assemble(&params).unwrap();
    assert!(is_self_ordered(&g));

    // Wholesale block swaps are the natural attack on a graph made of
    // near-identical copies; feed every pair to the scan alongside the
    // usual transpositions, 3-cycles, and random draws.
    let span = 16u32;
    let mut families = Vec::new();
    for c1 in 0..3u32 {
        for c2 in c1 + 1..3u32 {
            let mut images: Vec<u32> = (1..=48).collect();
            for r in 0..span {
                images[(c1 * span + r) as usize] = c2 * span + r + 1;
                images[(c2 * span + r) as usize] = c1 * span + r + 1;
            }
            families.push(Permutation::from_images(images).unwrap());
        }
    }
    let rep = robustness_adversarial(&g, &families, 100_000, 7).unwrap();
    // The cheapest attack found is a wholesale swap of two copies,
    // costing 3/4 per moved vertex; the floor below leaves headroom
    // for scan-order changes while still catching any collapse.
    assert!(
        rep.gamma_upper >= Ratio::new(1, 2),
        "no attack in the battery should get below the frozen floor, found {}",
        rep.gamma_upper
    );
}

#[test]
fn combining_bases_divides_robustness_by_degree() {
    // A one-vertex side is robust for every ratio, so gluing it under a
    // dense asymmetric side must keep robustness within the degree
    // penalty of the dense side's own.
    let mut dense = None;
    for seed in 1..40 {
        let (g, rep) = find_rso_small(8, None, seed, 50_000, true).unwrap();
        if g.min_degree() >= 2 {
            dense = Some((g, rep.gamma_exact.unwrap()));
            break;
        }
    }
    let (dense, gamma2) = dense.expect("a dense asymmetric graph on 8 vertices");
    assert!(gamma2 > Ratio::new(0, 1));

    let k1 = Graph::empty(1);
    for target in [1u32, 2] {
        let combined = disjoint_union_with_cross(&k1, &dense, &[(1, target)]).unwrap();
        assert_eq!(combined.n(), 9);
        let min_dense_side = (2..=9).map(|v| combined.degree(v)).min().unwrap();
        assert!(combined.degree(1) < min_dense_side, "the glued side must sit strictly below");
        let d = combined.max_degree() as i64;
        let floor = gamma2 / Ratio::from_integer(2 * d + 3);
        let rep = robustness_exact(&combined, 9).unwrap();
        let gamma = rep.gamma_exact.unwrap();
        assert!(
            gamma >= floor,
            "combined robustness {gamma} fell below {floor} with cross edge at {target}"
        );
        assert!(is_self_ordered(&combined));
    }
}

#[test]
fn expander_overlay_regularizes() {
    let params = greedy_params(32);
    let g = assemble(&params).unwrap();
    let mut cycle: Vec<(u32, u32)> = (1..32u32).map(|v| (v, v + 1)).collect();
    cycle.push((1, 32));
    let expander = Graph::from_edges(32, cycle).unwrap();
    let d_target = g.max_degree() + 2;
    let overlay = make_regular_expanding(&g, d_target, &expander).unwrap();
    assert!(overlay.degrees().iter().all(|&d| d == d_target));

    // The original edges survive inside the overlay.
    let kept: BTreeSet<(u32, u32)> = overlay
        .edges()
        .iter()
        .filter(|&&(u, v, _)| u != v)
        .map(|&(u, v, _)| (u.min(v), u.max(v)))
        .collect();
    for &(u, v) in g.edges() {
        assert!(kept.contains(&(u.min(v), u.max(v))));
    }
}

#[test]
fn assembled_graph_survives_relabeling_checks() {
    // Sanity on the oracle helper itself: a relabeled oracle presents
    // the permuted graph, nothing else.
    let params = code_params();
    let g = assemble(&params).unwrap();
    let mu = rso_perms::seeded::random_permutation(&mut rso_perms::seeded::rng_from_seed(9), 64);
    let h = apply_permutation(&g, &mu);
    let oracle = LocalGraphOracle::relabeled(&g, &mu);
    for v in 1..=64u32 {
        assert_eq!(oracle.neighbors(v), h.neighbors(v));
    }
}
