use num_rational::Ratio;
use rso_graph::{
    apply_permutation, apply_permutation_colored, apply_permutation_directed,
    colored_multiset_symdiff, directed_multiset_symdiff, symdiff, ColoredMultiGraph,
    DirectedColoredMultiGraph, Graph, Permutation,
};
use rso_verify::{
    automorphism_certificate, colored_robustness_adversarial, colored_robustness_exact,
    derangements, directed_colored_robustness_exact, expansion_combinatorial, expansion_sampled,
    expansion_spectral, far_from_isomorphic, find_isomorphism, first_asymmetric_graph,
    is_isomorphic, is_self_ordered, nm_extractor_error, quasi_orthogonality_error,
    robustness_adversarial, robustness_exact, robustness_exact_threaded, FarMode, NmMode,
    ScanMode, TwoSourceFunction, VerifyError,
};

fn ratio(n: i64, d: i64) -> Ratio<i64> {
    Ratio::new(n, d)
}

/// Every permutation of 1..=n, by straightforward recursion. This is the
/// test-side oracle path: it shares nothing with the scan engine.
fn all_perms(n: usize) -> Vec<Permutation> {
    fn rec(n: usize, prefix: &mut Vec<u32>, out: &mut Vec<Permutation>) {
        if prefix.len() == n {
            out.push(Permutation::from_images(prefix.clone()).unwrap());
            return;
        }
        for w in 1..=n as u32 {
            if !prefix.contains(&w) {
                prefix.push(w);
                rec(n, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

fn naive_gamma(g: &Graph) -> (Ratio<i64>, Permutation) {
    let mut best: Option<(Ratio<i64>, Permutation)> = None;
    for mu in all_perms(g.n()) {
        if mu.is_identity() {
            continue;
        }
        let r = ratio(
            symdiff(g, &apply_permutation(g, &mu)) as i64,
            mu.nonfixed_count() as i64,
        );
        let replace = match &best {
            None => true,
            Some((br, bw)) => r < *br || (r == *br && mu.images() < bw.images()),
        };
        if replace {
            best = Some((r, mu));
        }
    }
    best.unwrap()
}

#[test]
fn exact_robustness_matches_naive_oracle() {
    let graphs = [
        Graph::from_edges(3, [(1, 2), (2, 3)]).unwrap(),
        Graph::from_edges(3, [(1, 2), (1, 3), (2, 3)]).unwrap(),
        Graph::from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (1, 3)]).unwrap(),
        Graph::from_edges(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6), (1, 4), (2, 6)])
            .unwrap(),
    ];
    for g in &graphs {
        let report = robustness_exact(g, 9).unwrap();
        let (gamma, witness) = naive_gamma(g);
        assert_eq!(report.gamma_exact, Some(gamma));
        assert_eq!(report.gamma_upper, gamma);
        assert_eq!(report.witness, witness, "lex-smallest witness");
        assert_eq!(report.mode, ScanMode::Exact);
        let nfact: u64 = (1..=g.n() as u64).product();
        assert_eq!(report.permutations_examined, nfact - 1);
    }
}

#[test]
fn exact_robustness_spec_cases() {
    let p3 = Graph::from_edges(3, [(1, 2), (2, 3)]).unwrap();
    let r = robustness_exact(&p3, 9).unwrap();
    assert_eq!(r.gamma_exact, Some(ratio(0, 1)));
    assert_eq!(r.witness.images(), &[3, 2, 1], "the end-swap automorphism");

    let k3 = Graph::from_edges(3, [(1, 2), (1, 3), (2, 3)]).unwrap();
    let r = robustness_exact(&k3, 9).unwrap();
    assert_eq!(r.gamma_exact, Some(ratio(0, 1)));
    assert!(r.witness.compose(&r.witness).is_identity());

    let asym = first_asymmetric_graph(6).expect("6-vertex asymmetric graphs exist");
    let r = robustness_exact(&asym, 9).unwrap();
    assert!(r.gamma_exact.unwrap() > ratio(0, 1));
    assert_eq!(r.gamma_exact, Some(naive_gamma(&asym).0));
}

#[test]
fn exact_robustness_guards() {
    let big = Graph::empty(12);
    assert!(matches!(robustness_exact(&big, 9), Err(VerifyError::TooLarge { n: 12, limit: 9 })));
    assert!(matches!(robustness_exact(&Graph::empty(1), 9), Err(VerifyError::Degenerate(_))));
}

#[test]
fn threaded_scan_equals_single_thread() {
    let g = Graph::from_edges(7, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 7), (2, 5)])
        .unwrap();
    let single = robustness_exact_threaded(&g, 9, 1).unwrap();
    for threads in [2, 3, 4, 8] {
        assert_eq!(robustness_exact_threaded(&g, 9, threads).unwrap(), single);
    }
}

#[test]
fn adversarial_upper_bounds_exact() {
    let graphs = [
        Graph::from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (1, 3)]).unwrap(),
        first_asymmetric_graph(6).unwrap(),
    ];
    for g in &graphs {
        let exact = robustness_exact(g, 9).unwrap();
        let adv = robustness_adversarial(g, &[], 200, 7).unwrap();
        assert!(adv.gamma_upper >= exact.gamma_exact.unwrap());
        assert_eq!(adv.mode, ScanMode::AdversarialSampled);
        assert_eq!(adv.seed, Some(7));
        assert_eq!(adv, robustness_adversarial(g, &[], 200, 7).unwrap(), "seeded determinism");
    }
}

#[test]
fn adversarial_sees_transposition_automorphisms() {
    // C4 has the swap of opposite corners; gamma_upper must hit 0.
    let c4 = Graph::from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
    let adv = robustness_adversarial(&c4, &[], 0, 1).unwrap();
    assert_eq!(adv.gamma_upper, ratio(0, 1));
}

fn naive_colored_gamma(m: &ColoredMultiGraph) -> Ratio<i64> {
    all_perms(m.n())
        .into_iter()
        .filter(|mu| !mu.is_identity())
        .map(|mu| {
            ratio(
                colored_multiset_symdiff(m, &apply_permutation_colored(m, &mu)) as i64,
                mu.nonfixed_count() as i64,
            )
        })
        .min()
        .unwrap()
}

#[test]
fn colored_exact_cases() {
    // Distinctly colored path: breaking either edge costs 2, so the
    // cheapest attack is an end transposition at ratio 1.
    let m = ColoredMultiGraph::from_edges(3, [(1, 2, 1), (2, 3, 2)]).unwrap();
    let r = colored_robustness_exact(&m, 9).unwrap();
    assert_eq!(r.gamma_exact, Some(ratio(1, 1)));
    assert_eq!(r.gamma_exact, Some(naive_colored_gamma(&m)));

    // Monochromatic simple multigraph behaves exactly like its plain graph.
    let g = Graph::from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (2, 5)]).unwrap();
    let mono =
        ColoredMultiGraph::from_edges(5, g.edges().iter().map(|&(u, v)| (u, v, 1))).unwrap();
    assert_eq!(
        colored_robustness_exact(&mono, 9).unwrap().gamma_exact,
        robustness_exact(&g, 9).unwrap().gamma_exact
    );
}

#[test]
fn color_refinement_never_hurts() {
    // All 4-vertex graphs: per-edge colors vs one color.
    let pairs: Vec<(u32, u32)> =
        (1..=4u32).flat_map(|u| (u + 1..=4).map(move |v| (u, v))).collect();
    for mask in 1u32..1 << pairs.len() {
        let picked: Vec<(u32, u32)> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let mono =
            ColoredMultiGraph::from_edges(4, picked.iter().map(|&(u, v)| (u, v, 1))).unwrap();
        let refined = ColoredMultiGraph::from_edges(
            4,
            picked.iter().enumerate().map(|(i, &(u, v))| (u, v, i as u32 + 1)),
        )
        .unwrap();
        let g0 = colored_robustness_exact(&mono, 9).unwrap().gamma_exact.unwrap();
        let g1 = colored_robustness_exact(&refined, 9).unwrap().gamma_exact.unwrap();
        assert!(g1 >= g0, "refinement lowered gamma on mask {mask}: {g1} < {g0}");
    }
}

#[test]
fn colored_adversarial_deterministic() {
    let m = ColoredMultiGraph::from_edges(
        6,
        [(1, 2, 1), (2, 3, 1), (3, 4, 2), (4, 5, 2), (5, 6, 3), (1, 6, 3), (2, 5, 4)],
    )
    .unwrap();
    let a = colored_robustness_adversarial(&m, &[], 100, 3).unwrap();
    let b = colored_robustness_adversarial(&m, &[], 100, 3).unwrap();
    assert_eq!(a, b);
    let exact = colored_robustness_exact(&m, 9).unwrap();
    assert!(a.gamma_upper >= exact.gamma_exact.unwrap());
}

#[test]
fn directed_exact_cases() {
    let arc = DirectedColoredMultiGraph::from_arcs(2, [(1, 2, 1)]).unwrap();
    let r = directed_colored_robustness_exact(&arc, 9).unwrap();
    // Only candidate is the swap: it reverses the arc at cost 2 over 2 moved.
    assert_eq!(r.gamma_exact, Some(ratio(1, 1)));
    assert_eq!(r.permutations_examined, 1);

    // Refining arc colors never lowers gamma.
    let arcs = [(1u32, 2u32), (2, 3), (3, 4), (4, 1), (1, 3)];
    let mono =
        DirectedColoredMultiGraph::from_arcs(4, arcs.iter().map(|&(u, v)| (u, v, 1))).unwrap();
    let refined = DirectedColoredMultiGraph::from_arcs(
        4,
        arcs.iter().enumerate().map(|(i, &(u, v))| (u, v, i as u32 + 1)),
    )
    .unwrap();
    let g0 = directed_colored_robustness_exact(&mono, 9).unwrap().gamma_exact.unwrap();
    let g1 = directed_colored_robustness_exact(&refined, 9).unwrap().gamma_exact.unwrap();
    assert!(g1 >= g0);

    // Directed damage agrees with the library-level definition: the
    // 3-cycle 1->2->3 keeps only arc (2,3) in place, displacing 4 of 5
    // arcs in each direction.
    let mu = Permutation::three_cycle(4, 1, 2, 3);
    let lib = directed_multiset_symdiff(&mono, &apply_permutation_directed(&mono, &mu));
    assert_eq!(lib, 8);
}

#[test]
fn self_ordering_and_certificates() {
    let k3 = Graph::from_edges(3, [(1, 2), (1, 3), (2, 3)]).unwrap();
    assert!(!is_self_ordered(&k3));
    let cert = automorphism_certificate(&k3).unwrap();
    assert!(!cert.is_identity());
    assert_eq!(apply_permutation(&k3, &cert), k3);
    assert_eq!(cert.images(), &[1, 3, 2], "lex-smallest non-trivial automorphism");

    for n in 2..=4 {
        assert!(first_asymmetric_graph(n).is_none(), "no asymmetric graph on {n} vertices");
    }
    let g6 = first_asymmetric_graph(6).unwrap();
    assert!(is_self_ordered(&g6));
    assert!(automorphism_certificate(&g6).is_none());
    assert!(robustness_exact(&g6, 9).unwrap().gamma_exact.unwrap() > ratio(0, 1));
}

#[test]
fn isomorphism_search() {
    let g = Graph::from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]).unwrap();
    let mu = Permutation::from_images([3, 5, 1, 4, 2]).unwrap();
    let h = apply_permutation(&g, &mu);
    let found = find_isomorphism(&g, &h).expect("relabelings are isomorphic");
    assert_eq!(apply_permutation(&g, &found), h);
    assert!(is_isomorphic(&g, &h));

    let p5 = Graph::from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
    assert!(find_isomorphism(&g, &p5).is_none());
}

#[test]
fn far_from_isomorphic_cases() {
    let k3 = Graph::from_edges(3, [(1, 2), (1, 3), (2, 3)]).unwrap();
    let p3 = Graph::from_edges(3, [(1, 2), (2, 3)]).unwrap();
    let same = far_from_isomorphic(&k3, &k3, FarMode::Exact).unwrap();
    assert_eq!(same.distance, 0);
    // Any placement of the 2-edge path sits inside the triangle, leaving
    // exactly one uncovered edge.
    let r = far_from_isomorphic(&k3, &p3, FarMode::Exact).unwrap();
    assert_eq!(r.distance, 1);
    assert_eq!(r.bijections_examined, 6);

    // Naive cross-check on a 5-vertex pair.
    let g = Graph::from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (1, 3)]).unwrap();
    let h = Graph::from_edges(5, [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3)]).unwrap();
    let exact = far_from_isomorphic(&g, &h, FarMode::Exact).unwrap();
    let naive = all_perms(5)
        .iter()
        .map(|phi| symdiff(&g, &apply_permutation(&h, phi)))
        .min()
        .unwrap();
    assert_eq!(exact.distance, naive);

    let s1 = far_from_isomorphic(&g, &h, FarMode::Sampled { samples: 5, seed: 11 }).unwrap();
    let s2 = far_from_isomorphic(&g, &h, FarMode::Sampled { samples: 5, seed: 11 }).unwrap();
    assert_eq!(s1, s2);
    assert!(s1.distance >= exact.distance);
    assert!(!s1.exact);
}

#[test]
fn expansion_exact_cases() {
    let k4 = Graph::from_edges(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
    let r = expansion_combinatorial(&k4, 20).unwrap();
    assert_eq!(r.gamma_combinatorial, Some(ratio(1, 1)));

    let c6 = Graph::from_edges(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)]).unwrap();
    let r = expansion_combinatorial(&c6, 20).unwrap();
    assert_eq!(r.gamma_combinatorial, Some(ratio(2, 3)));
    let w = r.witness.unwrap();
    assert_eq!(w.len(), 3, "three consecutive cycle vertices");

    let two_triangles =
        Graph::from_edges(6, [(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)]).unwrap();
    let r = expansion_combinatorial(&two_triangles, 20).unwrap();
    assert_eq!(r.gamma_combinatorial, Some(ratio(0, 1)));
}

#[test]
fn expansion_exact_matches_subset_oracle() {
    // Independent oracle: direct iteration over subset bitmasks.
    let g = Graph::from_edges(7, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 7), (2, 6)])
        .unwrap();
    let n = g.n();
    let mut naive: Option<Ratio<i64>> = None;
    for mask in 1u32..1 << n {
        let size = mask.count_ones() as usize;
        if size > n / 2 {
            continue;
        }
        let subset: Vec<u32> = (0..n).filter(|&v| mask >> v & 1 == 1).map(|v| v as u32 + 1).collect();
        let mut out = std::collections::HashSet::new();
        for &v in &subset {
            for w in g.neighbors(v) {
                if mask >> (w - 1) & 1 == 0 {
                    out.insert(w);
                }
            }
        }
        let r = ratio(out.len() as i64, size as i64);
        naive = Some(match naive {
            None => r,
            Some(b) => b.min(r),
        });
    }
    let report = expansion_combinatorial(&g, 20).unwrap();
    assert_eq!(report.gamma_combinatorial, naive);
}

#[test]
fn expansion_sampled_and_spectral() {
    let c6 = Graph::from_edges(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)]).unwrap();
    let exact = expansion_combinatorial(&c6, 20).unwrap().gamma_combinatorial.unwrap();
    let sampled = expansion_sampled(&c6, 100, 5).unwrap();
    assert!(sampled.gamma_upper.unwrap() >= exact);
    assert_eq!(sampled, expansion_sampled(&c6, 100, 5).unwrap());

    let k5 = Graph::from_edges(
        5,
        (1..=5u32).flat_map(|u| (u + 1..=5).map(move |v| (u, v))).collect::<Vec<_>>(),
    )
    .unwrap();
    let spec = expansion_spectral(&k5, 300, 2).unwrap();
    assert!((spec.lambda2.unwrap() - 1.0).abs() < 1e-6, "K5 second eigenvalue is -1");
    assert_eq!(spec.lambda2, expansion_spectral(&k5, 300, 2).unwrap().lambda2);

    let two_triangles =
        Graph::from_edges(6, [(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)]).unwrap();
    let spec = expansion_spectral(&two_triangles, 300, 2).unwrap();
    assert!((spec.lambda2.unwrap() - 2.0).abs() < 1e-6, "disconnection doubles the top eigenvalue");
}

fn inner_product_table(l: u32) -> TwoSourceFunction {
    let size = (1usize << l) - 1;
    TwoSourceFunction::from_fn(size, size, |x, y| (x & y).count_ones() % 2 == 1)
}

#[test]
fn quasi_orthogonality_cases() {
    assert_eq!(quasi_orthogonality_error(&inner_product_table(2)), ratio(1, 6));

    let constant = TwoSourceFunction::from_fn(4, 4, |_, _| false);
    assert_eq!(quasi_orthogonality_error(&constant), ratio(1, 2));

    for l in [3u32, 4] {
        let eps = quasi_orthogonality_error(&inner_product_table(l));
        let bound = ratio(1, 1 << (l - 1));
        assert!(eps <= bound, "inner product at l={l}: {eps} > {bound}");
    }
}

#[test]
fn quasi_orthogonality_permutation_invariant() {
    let f = inner_product_table(3);
    let eps = quasi_orthogonality_error(&f);
    let rp = Permutation::from_images([3, 1, 7, 2, 6, 5, 4]).unwrap();
    let cp = Permutation::from_images([2, 4, 6, 1, 3, 5, 7]).unwrap();
    assert_eq!(quasi_orthogonality_error(&f.permuted(&rp, &cp)), eps);
}

#[test]
fn derangement_enumeration() {
    assert_eq!(derangements(2).len(), 1);
    assert_eq!(derangements(3).len(), 2);
    assert_eq!(derangements(4).len(), 9);
    assert_eq!(derangements(6).len(), 265);
    assert!(derangements(5).iter().all(|d| d.is_derangement()));
}

#[test]
fn nm_extractor_cases() {
    // xor on [2] with the only derangement pair: outputs perfectly
    // correlated, half a unit from unbiased.
    let xor = TwoSourceFunction::from_fn(2, 2, |x, y| x != y);
    let r = nm_extractor_error(&xor, 1, NmMode::Exact).unwrap();
    assert_eq!(r.epsilon, ratio(1, 2));
    assert_eq!(r.pairs_examined, 1);

    let constant = TwoSourceFunction::from_fn(3, 3, |_, _| true);
    assert_eq!(nm_extractor_error(&constant, 1, NmMode::Exact).unwrap().epsilon, ratio(1, 2));

    // Identity-matrix table on [3], worked by hand: shifted diagonals
    // give distance 1/6 on mismatched shifts and 1/2 on matched ones.
    let diag = TwoSourceFunction::from_fn(3, 3, |x, y| x == y);
    let r = nm_extractor_error(&diag, 1, NmMode::Exact).unwrap();
    assert_eq!(r.epsilon, ratio(1, 2));
    assert_eq!(r.pairs_examined, 4);

    let s1 = nm_extractor_error(&diag, 1, NmMode::Sampled { samples: 3, seed: 4 }).unwrap();
    assert_eq!(s1, nm_extractor_error(&diag, 1, NmMode::Sampled { samples: 3, seed: 4 }).unwrap());
    assert!(s1.epsilon <= r.epsilon);

    let big = TwoSourceFunction::from_fn(7, 7, |x, y| (x * y) % 2 == 0);
    assert!(matches!(
        nm_extractor_error(&big, 1, NmMode::Exact),
        Err(VerifyError::TooLarge { .. })
    ));
    let rect = TwoSourceFunction::from_fn(2, 3, |_, _| true);
    assert!(matches!(
        nm_extractor_error(&rect, 1, NmMode::Exact),
        Err(VerifyError::NonSquare { rows: 2, cols: 3 })
    ));
}
