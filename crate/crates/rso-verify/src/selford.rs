use rso_graph::{Graph, Permutation};

/// Lexicographically smallest non-trivial automorphism, or None when the
/// graph is asymmetric. Backtracking over images in ascending order with
/// degree pruning; identity is skipped, not short-circuited, so the
/// first surviving leaf really is the lex-smallest non-trivial one.
pub fn automorphism_certificate(g: &Graph) -> Option<Permutation> {
    let n = g.n();
    assert!(n <= 64, "automorphism search is for desk-scale graphs");
    if n < 2 {
        return None;
    }
    let deg = g.degrees();
    let adj = g.adjacency_masks();
    let mut images: Vec<u32> = Vec::with_capacity(n);
    let mut used: u64 = 0;
    search(n, &deg, &adj, &mut images, &mut used)
        .map(|im| Permutation::from_images(im).expect("backtracking assigns a bijection"))
}

fn search(
    n: usize,
    deg: &[usize],
    adj: &[u64],
    images: &mut Vec<u32>,
    used: &mut u64,
) -> Option<Vec<u32>> {
    let v = images.len();
    if v == n {
        let trivial = images.iter().enumerate().all(|(i, &w)| w == i as u32 + 1);
        return if trivial { None } else { Some(images.clone()) };
    }
    for w in 1..=n as u32 {
        let bit = 1u64 << (w - 1);
        if *used & bit != 0 || deg[v] != deg[w as usize - 1] {
            continue;
        }
        // Adjacency to every already-placed vertex must be preserved.
        let ok = (0..v).all(|u| {
            let before = adj[v] >> u & 1;
            let after = adj[w as usize - 1] >> (images[u] - 1) & 1;
            before == after
        });
        if !ok {
            continue;
        }
        *used |= bit;
        images.push(w);
        if let Some(hit) = search(n, deg, adj, images, used) {
            return Some(hit);
        }
        images.pop();
        *used &= !bit;
    }
    None
}

/// True iff the only automorphism is the identity.
pub fn is_self_ordered(g: &Graph) -> bool {
    automorphism_certificate(g).is_none()
}

/// First asymmetric graph on [n] in edge-bitmask order (edges ranked
/// lexicographically), or None when every n-vertex graph has symmetry.
pub fn first_asymmetric_graph(n: usize) -> Option<Graph> {
    let pairs: Vec<(u32, u32)> = (1..=n as u32)
        .flat_map(|u| (u + 1..=n as u32).map(move |v| (u, v)))
        .collect();
    assert!(pairs.len() <= 22, "graph-space scan is exponential in edge slots");
    for mask in 0u64..1 << pairs.len() {
        let edges: Vec<(u32, u32)> =
            pairs.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        let g = Graph::from_edges(n, edges).expect("pairs are in range");
        if is_self_ordered(&g) {
            return Some(g);
        }
    }
    None
}
