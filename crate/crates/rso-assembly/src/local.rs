use std::cell::Cell;
use std::collections::BTreeMap;

use rso_graph::{apply_permutation, Graph, Permutation};
use rso_perms::code_based_perm;
use rso_verify::find_isomorphism;

use crate::error::AssemblyError;
use crate::params::{PermSource, ThreeStepParams};

/// Adjacency oracle with a query meter. Tests hand it either the
/// assembled graph itself or a relabeled copy; the local algorithms see
/// nothing but `neighbors`, and the meter is how their locality claims
/// get checked.
pub struct LocalGraphOracle {
    adj: Vec<Vec<u32>>,
    queries: Cell<u64>,
}

impl LocalGraphOracle {
    pub fn of_graph(g: &Graph) -> LocalGraphOracle {
        let mut adj = g.adjacency();
        for row in &mut adj {
            row.sort_unstable();
        }
        LocalGraphOracle { adj, queries: Cell::new(0) }
    }

    /// Presents mu(g): vertex labels are pushed through mu, adjacency
    /// is otherwise untouched.
    pub fn relabeled(g: &Graph, mu: &Permutation) -> LocalGraphOracle {
        LocalGraphOracle::of_graph(&apply_permutation(g, mu))
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        self.queries.set(self.queries.get() + 1);
        &self.adj[v as usize - 1]
    }

    pub fn queries_used(&self) -> u64 {
        self.queries.get()
    }
}

/// Neighbor list of v in the assembled graph, computed from the block
/// decomposition and the code alone; the graph is never materialized.
/// Only code-sourced parameters qualify: a greedy collection has no
/// local description.
pub fn local_neighbors(params: &ThreeStepParams, v: u32) -> Result<Vec<u32>, AssemblyError> {
    let PermSource::Code(code) = params.source() else {
        return Err(AssemblyError::BadParams(
            "local neighbor computation needs a code-sourced matching".into(),
        ));
    };
    if v == 0 || v as usize > params.n() {
        return Err(AssemblyError::BadParams(format!(
            "vertex {v} outside 1..={}",
            params.n()
        )));
    }
    let span = 2 * params.ell();
    let i = (v as usize - 1) / span;
    let r = ((v as usize - 1) % span + 1) as u32;
    let block = (i * span) as u32;
    let ell = params.ell() as u32;
    let pi = code_based_perm(code, i + 1);
    let mut out: Vec<u32>;
    if r <= ell {
        out = params.g1().neighbors(r).iter().map(|&w| w + block).collect();
        out.push(block + ell + pi.apply(r));
    } else {
        let w = r - ell;
        out = params.g2().neighbors(w).iter().map(|&x| x + block + ell).collect();
        out.push(block + pi.inverse().apply(w));
    }
    out.sort_unstable();
    Ok(out)
}

/// The local ordering procedure bound to one oracle: `apply(v)`
/// retrieves v's component, splits it by degree into the two base
/// copies, pins each copy by its unique isomorphism to the base graph,
/// reads the matching permutation off the cross edges, and decodes it
/// to the component index. The result is the position v holds in the
/// assembled graph, whatever labels the oracle uses.
pub struct LocalOrder<'a> {
    oracle: &'a LocalGraphOracle,
    params: &'a ThreeStepParams,
}

pub fn local_self_order<'a>(
    oracle: &'a LocalGraphOracle,
    params: &'a ThreeStepParams,
) -> Result<LocalOrder<'a>, AssemblyError> {
    if oracle.n() != params.n() {
        return Err(AssemblyError::BadParams(format!(
            "oracle has {} vertices, parameters promise {}",
            oracle.n(),
            params.n()
        )));
    }
    Ok(LocalOrder { oracle, params })
}

impl LocalOrder<'_> {
    pub fn apply(&self, v: u32) -> Result<u32, AssemblyError> {
        let before = self.oracle.queries_used();
        let out = order_component(self.params, v, &mut |u| {
            Ok(self.oracle.neighbors(u).to_vec())
        })?;
        let spent = self.oracle.queries_used() - before;
        assert!(
            spent <= self.params.query_budget,
            "ordering one vertex took {spent} queries, budget {}",
            self.params.query_budget
        );
        Ok(out)
    }
}

/// Decode one permutation back to its component index: exact codeword
/// match for code sources, exact collection match for greedy ones. A
/// near-miss is an input rejection, never a correction.
fn decode_component(params: &ThreeStepParams, pi: &Permutation) -> Option<usize> {
    match params.source() {
        PermSource::Code(code) => {
            let mut word = 0u64;
            for j in 0..code.l {
                let (a, b) = (2 * j as u32 + 1, 2 * j as u32 + 2);
                match (pi.apply(a), pi.apply(b)) {
                    (x, y) if x == a && y == b => {}
                    (x, y) if x == b && y == a => word |= 1 << j,
                    _ => return None,
                }
            }
            (1..=params.components()).find(|&i| code.encode(i) == word)
        }
        PermSource::Greedy { .. } => {
            params.perms().iter().position(|p| p == pi).map(|i| i + 1)
        }
    }
}

/// Shared core of the plain and de-gadgetized orderings: everything is
/// phrased against a neighbor callback so the caller decides what an
/// edge is.
pub(crate) fn order_component(
    params: &ThreeStepParams,
    v: u32,
    fetch: &mut dyn FnMut(u32) -> Result<Vec<u32>, AssemblyError>,
) -> Result<u32, AssemblyError> {
    let span = 2 * params.ell();
    let mut adj: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    let mut queue = vec![v];
    adj.insert(v, fetch(v)?);
    while let Some(u) = queue.pop() {
        let nbrs = adj[&u].clone();
        for w in nbrs {
            if !adj.contains_key(&w) {
                if adj.len() == span {
                    return Err(AssemblyError::MalformedComponent(format!(
                        "component of {v} exceeds {span} vertices"
                    )));
                }
                adj.insert(w, fetch(w)?);
                queue.push(w);
            }
        }
    }
    if adj.len() != span {
        return Err(AssemblyError::MalformedComponent(format!(
            "component of {v} has {} vertices, expected {span}",
            adj.len()
        )));
    }

    // Sparse half vs dense half, split purely by degree.
    let cut = params.d_prime() + 1;
    let a_side: Vec<u32> = adj.iter().filter(|(_, n)| n.len() <= cut).map(|(&u, _)| u).collect();
    let b_side: Vec<u32> = adj.iter().filter(|(_, n)| n.len() > cut).map(|(&u, _)| u).collect();
    let ell = params.ell();
    if a_side.len() != ell || b_side.len() != ell {
        return Err(AssemblyError::MalformedComponent(format!(
            "degree split gives {} + {} vertices, expected {ell} + {ell}",
            a_side.len(),
            b_side.len()
        )));
    }

    let local = |side: &[u32], u: u32| side.binary_search(&u).map(|k| k as u32 + 1);
    let induced = |side: &[u32]| -> Result<Graph, AssemblyError> {
        let mut edges = Vec::new();
        for (k, &u) in side.iter().enumerate() {
            for &w in &adj[&u] {
                if let Ok(j) = local(side, w) {
                    if j > k as u32 + 1 {
                        edges.push((k as u32 + 1, j));
                    }
                }
            }
        }
        Ok(Graph::from_edges(side.len(), edges)?)
    };

    // The base graphs are asymmetric, so these maps are unique: any two
    // would differ by a non-trivial automorphism.
    let phi_a = find_isomorphism(&induced(&a_side)?, params.g1()).ok_or_else(|| {
        AssemblyError::MalformedComponent("sparse half does not match the first base graph".into())
    })?;
    let phi_b = find_isomorphism(&induced(&b_side)?, params.g2()).ok_or_else(|| {
        AssemblyError::MalformedComponent("dense half does not match the second base graph".into())
    })?;

    // Each sparse vertex has exactly one dense neighbor; those pairs
    // spell out the matching permutation in base coordinates.
    let mut images = vec![0u32; ell];
    for &u in &a_side {
        let mut partners = adj[&u].iter().filter(|w| b_side.binary_search(w).is_ok());
        let (Some(&p), None) = (partners.next(), partners.next()) else {
            return Err(AssemblyError::MalformedComponent(format!(
                "cross-degree of a sparse vertex is not 1 at oracle vertex {u}"
            )));
        };
        let from = phi_a.apply(local(&a_side, u).expect("u indexes its own side"));
        images[from as usize - 1] = phi_b.apply(local(&b_side, p).expect("partner is dense-side"));
    }
    let pi = Permutation::from_images(images).map_err(|_| {
        AssemblyError::MalformedComponent("cross edges do not spell a permutation".into())
    })?;
    let Some(index) = decode_component(params, &pi) else {
        return Err(AssemblyError::MalformedComponent(
            "matching permutation decodes to no component".into(),
        ));
    };

    let block = ((index - 1) * span) as u32;
    Ok(match local(&a_side, v) {
        Ok(k) => block + phi_a.apply(k),
        Err(_) => {
            let k = local(&b_side, v).expect("v is on one side or the other");
            block + ell as u32 + phi_b.apply(k)
        }
    })
}
