use serde::{Deserialize, Serialize};

use rso_graph::{ColoredMultiGraph, Graph};
use rso_perms::seeded::{coin, rand_below, rng_from_seed};
use rso_verify::{is_isomorphic, is_self_ordered};

use crate::error::TransformError;

/// One de-coloring gadget: a connected asymmetric graph plus its
/// designated edge, the edge removed when the gadget is spliced in. The
/// freed endpoints p < q become the attachment points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gadget {
    pub graph: Graph,
    pub designated: (u32, u32),
}

/// Gadgets indexed by color: an edge colored i is replaced by a copy of
/// the i-th gadget. All gadgets share a vertex count and are pairwise
/// non-isomorphic, so the splice encodes the color structurally.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetSet {
    pub gadgets: Vec<Gadget>,
}

impl GadgetSet {
    pub fn len(&self) -> usize {
        self.gadgets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gadgets.is_empty()
    }

    /// Common vertex count of the gadgets.
    pub fn k(&self) -> usize {
        self.gadgets.first().map(|g| g.graph.n()).unwrap_or(0)
    }

    pub fn validate(&self) -> Result<(), TransformError> {
        let bad = |msg: String| Err(TransformError::BadGadgetSet(msg));
        if self.gadgets.is_empty() {
            return bad("no gadgets".into());
        }
        let k = self.k();
        for (i, g) in self.gadgets.iter().enumerate() {
            if g.graph.n() != k {
                return bad(format!("gadget {} has {} vertices, expected {k}", i + 1, g.graph.n()));
            }
            if !g.graph.is_connected() {
                return bad(format!("gadget {} is disconnected", i + 1));
            }
            if !is_self_ordered(&g.graph) {
                return bad(format!("gadget {} has a non-trivial automorphism", i + 1));
            }
            let (p, q) = g.designated;
            if !g.graph.has_edge(p, q) {
                return bad(format!("gadget {} lacks its designated edge {{{p},{q}}}", i + 1));
            }
            if !g.graph.without_edge(p, q).is_connected() {
                return bad(format!("designated edge of gadget {} is a bridge", i + 1));
            }
        }
        for i in 0..self.gadgets.len() {
            for j in i + 1..self.gadgets.len() {
                if is_isomorphic(&self.gadgets[i].graph, &self.gadgets[j].graph) {
                    return bad(format!("gadgets {} and {} are isomorphic", i + 1, j + 1));
                }
            }
        }
        Ok(())
    }
}

/// Lexicographically first edge whose removal keeps the graph connected.
/// None exactly when every edge is a bridge (the graph is a forest).
fn designated_edge(g: &Graph) -> Option<(u32, u32)> {
    g.edges()
        .iter()
        .copied()
        .find(|&(u, v)| g.without_edge(u, v).is_connected())
}

const SEARCH_BUDGET: u64 = 50_000;

/// Search for c pairwise non-isomorphic connected asymmetric gadgets on
/// k vertices with max degree at most d, by seeded random generation
/// plus certification. With regular = true candidates are drawn from
/// the stub-pairing model and come out exactly d-regular when k*d is
/// even (one vertex runs a degree short otherwise).
///
/// No asymmetric graph exists below 6 vertices, so k < 6 is refused
/// outright. Other infeasible parameter mixes (say d <= 2, where every
/// connected graph is a path or cycle and hence symmetric) surface as a
/// budget-exhaustion error instead.
pub fn find_gadgets(
    d: usize,
    c: u32,
    k: usize,
    seed: u64,
    regular: bool,
) -> Result<GadgetSet, TransformError> {
    if k < 6 {
        return Err(TransformError::NoGadgetsThisSmall { k });
    }
    let want = c as usize;
    let mut rng = rng_from_seed(seed);
    let mut found: Vec<Gadget> = Vec::new();
    let mut attempts = 0u64;
    while found.len() < want {
        if attempts >= SEARCH_BUDGET {
            return Err(TransformError::GadgetSearchExhausted {
                attempts,
                found: found.len(),
                want,
            });
        }
        attempts += 1;
        let cand = if regular {
            random_regular(&mut rng, k, d)
        } else {
            random_degree_capped(&mut rng, k, d)
        };
        let Some(g) = cand else { continue };
        if !g.is_connected() || !is_self_ordered(&g) {
            continue;
        }
        let Some(designated) = designated_edge(&g) else {
            continue;
        };
        if found.iter().any(|f| is_isomorphic(&f.graph, &g)) {
            continue;
        }
        found.push(Gadget { graph: g, designated });
    }
    let set = GadgetSet { gadgets: found };
    set.validate()?;
    Ok(set)
}

/// Stub-pairing draw of a d-regular graph on k vertices; candidates with
/// loops or parallel stub pairs are rejected (returns None), which is
/// the standard route to a near-uniform simple regular graph. When k*d
/// is odd the last vertex gives up one stub.
fn random_regular(rng: &mut rand_chacha::ChaCha8Rng, k: usize, d: usize) -> Option<Graph> {
    let mut stubs: Vec<u32> = Vec::new();
    for v in 1..=k as u32 {
        for _ in 0..d {
            stubs.push(v);
        }
    }
    if stubs.len() % 2 == 1 {
        stubs.pop();
    }
    for i in (1..stubs.len()).rev() {
        let j = rand_below(rng, i as u64 + 1) as usize;
        stubs.swap(i, j);
    }
    let mut edges = Vec::with_capacity(stubs.len() / 2);
    for pair in stubs.chunks(2) {
        if pair[0] == pair[1] {
            return None;
        }
        edges.push((pair[0], pair[1]));
    }
    Graph::from_edges(k, edges).ok()
}

/// Random graph with per-vertex degree cap d: visit all vertex pairs in
/// a random order, keep each with probability 1/2 while both endpoints
/// have room.
fn random_degree_capped(rng: &mut rand_chacha::ChaCha8Rng, k: usize, d: usize) -> Option<Graph> {
    let mut pairs: Vec<(u32, u32)> = Vec::new();
    for u in 1..=k as u32 {
        for v in u + 1..=k as u32 {
            pairs.push((u, v));
        }
    }
    for i in (1..pairs.len()).rev() {
        let j = rand_below(rng, i as u64 + 1) as usize;
        pairs.swap(i, j);
    }
    let mut deg = vec![0usize; k];
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if deg[u as usize - 1] < d && deg[v as usize - 1] < d && coin(rng) {
            deg[u as usize - 1] += 1;
            deg[v as usize - 1] += 1;
            edges.push((u, v));
        }
    }
    Some(Graph::from_edges(k, edges).expect("capped sampler emits distinct in-range pairs"))
}

/// Replace every colored edge of an eligible multigraph by a copy of the
/// gadget matching its color, turning colors and multiplicities into
/// plain structure. Edge j (1-based input order) gets the vertex block
/// n+(j-1)k+1 ..= n+jk; the gadget's designated edge {p,q} is dropped
/// and {u,p}, {v,q} attach the copy, smaller endpoint to p. A self-loop
/// attaches twice to its one endpoint.
///
/// The output is a simple graph: loops become two attachments, parallel
/// edges occupy different blocks.
pub fn gadgetize(m: &ColoredMultiGraph, gadgets: &GadgetSet) -> Result<Graph, TransformError> {
    gadgets.validate()?;
    gadgetize_unchecked(m, gadgets, None, 0)
}

/// gadgetize with one color routed to an alternate gadget on k+1
/// vertices, which lets a caller hit any target vertex count rather
/// than only n + m*k. The alternate's size makes it non-isomorphic to
/// every base gadget for free.
pub fn gadgetize_mixed(
    m: &ColoredMultiGraph,
    gadgets: &GadgetSet,
    alt: &Gadget,
    alt_color: u32,
) -> Result<Graph, TransformError> {
    gadgets.validate()?;
    let k = gadgets.k();
    if alt.graph.n() != k + 1 {
        return Err(TransformError::SizeMismatch { expected: k + 1, got: alt.graph.n() });
    }
    let single = GadgetSet { gadgets: vec![alt.clone()] };
    single.validate()?;
    if alt_color == 0 || alt_color > gadgets.len() as u32 {
        return Err(TransformError::ColorTooHigh { color: alt_color, limit: gadgets.len() as u32 });
    }
    gadgetize_unchecked(m, gadgets, Some(alt), alt_color)
}

fn gadgetize_unchecked(
    m: &ColoredMultiGraph,
    gadgets: &GadgetSet,
    alt: Option<&Gadget>,
    alt_color: u32,
) -> Result<Graph, TransformError> {
    if !m.is_eligible() {
        return Err(TransformError::Ineligible(
            "gadget replacement needs loops everywhere and distinct colors per endpoint pair"
                .into(),
        ));
    }
    let limit = gadgets.len() as u32;
    if let Some(&(_, _, color)) = m.edges().iter().find(|&&(_, _, c)| c > limit) {
        return Err(TransformError::ColorTooHigh { color, limit });
    }

    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut next = m.n() as u32;
    for &(u, v, color) in m.edges() {
        let gadget = match alt {
            Some(a) if color == alt_color => a,
            _ => &gadgets.gadgets[color as usize - 1],
        };
        let base = next;
        next += gadget.graph.n() as u32;
        let (p, q) = gadget.designated;
        for &(a, b) in gadget.graph.edges() {
            if (a, b) != (p, q) {
                edges.push((base + a, base + b));
            }
        }
        edges.push((u, base + p));
        edges.push((v, base + q));
    }
    Ok(Graph::from_edges(next as usize, edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forests_have_no_designated_edge() {
        let tree = Graph::from_edges(4, [(1, 2), (2, 3), (2, 4)]).unwrap();
        assert_eq!(designated_edge(&tree), None);
        let cycle = Graph::from_edges(3, [(1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(designated_edge(&cycle), Some((1, 2)));
    }

    #[test]
    fn stub_pairing_is_regular_or_rejected() {
        let mut rng = rng_from_seed(5);
        let mut seen = 0;
        for _ in 0..200 {
            if let Some(g) = random_regular(&mut rng, 8, 3) {
                assert!(g.degrees().iter().all(|&d| d == 3));
                seen += 1;
            }
        }
        assert!(seen > 0, "pairing model never produced a simple graph");
    }
}
