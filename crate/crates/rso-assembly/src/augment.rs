use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use rso_graph::{ColoredMultiGraph, Graph};
use rso_transform::{compact_colors, eligibility_pass, find_gadgets, gadgetize, GadgetSet};
use rso_verify::is_isomorphic;

use crate::error::AssemblyError;
use crate::local::{order_component, LocalGraphOracle};
use crate::params::ThreeStepParams;
use crate::pathfinder::{find_path, path_finder_graph};

/// The assembled graph with routing structure mixed in: a position
/// cycle-and-flip graph is laid over the same vertices with its own
/// color, the union is made eligible (loops added, parallels fanned
/// out into color bands), and every colored edge is then replaced by a
/// tagged asymmetric gadget so the result is simple again. The fields
/// record everything a walker needs to see through the gadgets: which
/// compacted color means an original edge, which mean routing edges,
/// and the degree threshold separating original vertices from gadget
/// interiors.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Augmented {
    pub graph: Graph,
    pub params: ThreeStepParams,
    pub lh: usize,
    /// Compacted colored multigraph as it stood before de-coloring.
    pub colored: ColoredMultiGraph,
    pub gadgets: GadgetSet,
    /// palette[new - 1] = color before compaction.
    pub palette: Vec<u32>,
    pub base_color: u32,
    pub pf_colors: Vec<u32>,
    pub loop_color: u32,
    /// Vertices with this degree or more are originals; gadget
    /// interiors all sit strictly below.
    pub threshold: usize,
    pub order_budget: u64,
    pub reversed_budget: u64,
}

const GADGET_DEGREE: usize = 4;
const GADGET_SIZE: usize = 6;
const RESEED_TRIES: u64 = 20;

/// Smallest position count whose cycle-and-flip graph covers n.
fn cover(n: usize) -> Result<usize, AssemblyError> {
    (1..=16)
        .find(|&lh| lh << lh >= n)
        .ok_or_else(|| AssemblyError::BadParams(format!("no routing cover for {n} vertices")))
}

pub fn augment_for_local_ordering(
    gn: &Graph,
    params: &ThreeStepParams,
    gadget_seed: u64,
) -> Result<Augmented, AssemblyError> {
    let n = gn.n();
    if n != params.n() {
        return Err(AssemblyError::BadParams(format!(
            "graph has {n} vertices, parameters promise {}",
            params.n()
        )));
    }
    let lh = cover(n)?;
    let pf = path_finder_graph(lh)?;

    let mut edges: Vec<(u32, u32, u32)> =
        gn.edges().iter().map(|&(u, v)| (u, v, 1)).collect();
    edges.extend(
        pf.edges()
            .iter()
            .filter(|&&(u, v)| u as usize <= n && v as usize <= n)
            .map(|&(u, v)| (u, v, 2)),
    );
    let union = ColoredMultiGraph::from_edges(n, edges)?;
    let d0 = union.max_degree();
    let eligible = eligibility_pass(&union, d0, 2)?;
    let (colored, palette) = compact_colors(&eligible);

    let compacted = |old: u32| {
        palette.iter().position(|&c| c == old).map(|k| k as u32 + 1)
    };
    let base_color = compacted(1).expect("original edges survive the pass");
    let loop_color = compacted(2 * d0 as u32 + 1).expect("the pass adds loops");
    let pf_colors: Vec<u32> =
        [2, d0 as u32 + 2].into_iter().filter_map(compacted).collect();

    // The walker identifies a gadget block by the block's subgraph,
    // which is the gadget minus its designated edge; the set must stay
    // pairwise distinguishable after that deletion, not just as whole
    // gadgets, so retry the seeded search until a set qualifies.
    let mut gadgets = None;
    for t in 0..RESEED_TRIES {
        let Ok(set) = find_gadgets(GADGET_DEGREE, palette.len() as u32, GADGET_SIZE, gadget_seed + t, false) else {
            continue;
        };
        let opened: Vec<Graph> = set
            .gadgets
            .iter()
            .map(|g| g.graph.without_edge(g.designated.0, g.designated.1))
            .collect();
        let distinct = (0..opened.len()).all(|i| {
            (i + 1..opened.len()).all(|j| !is_isomorphic(&opened[i], &opened[j]))
        });
        if distinct {
            gadgets = Some(set);
            break;
        }
    }
    let Some(gadgets) = gadgets else {
        return Err(AssemblyError::SearchExhausted {
            what: "a gadget set that stays distinguishable once opened",
            budget: RESEED_TRIES as usize,
        });
    };
    let graph = gadgetize(&colored, &gadgets)?;

    let min_original = (1..=n as u32).map(|v| graph.degree(v)).min().unwrap_or(0);
    let max_interior = (n as u32 + 1..=graph.n() as u32).map(|v| graph.degree(v)).max().unwrap_or(0);
    if min_original <= max_interior {
        return Err(AssemblyError::BadParams(format!(
            "no degree gap after de-coloring: originals reach down to {min_original}, gadget interiors up to {max_interior}"
        )));
    }

    let ell = params.ell() as u64;
    let per_logical = 2 + (d0 as u64 + 2) * (GADGET_SIZE as u64 + 2);
    let order_budget = 8 * ell * per_logical;
    let reversed_budget = 16 * lh as u64 * order_budget;
    Ok(Augmented {
        graph,
        params: params.clone(),
        lh,
        colored,
        gadgets,
        palette,
        base_color,
        pf_colors,
        loop_color,
        threshold: min_original as usize,
        order_budget,
        reversed_budget,
    })
}

/// Sees the assembled structure through the gadgets: every maximal run
/// of below-threshold vertices between two originals is one gadget
/// block, and matching its subgraph against the opened gadgets recovers
/// the color of the edge it replaced. All lookups are cached, so a walk
/// that keeps to one neighborhood pays for each block once.
pub struct DegadgetOracle<'a> {
    oracle: &'a LocalGraphOracle,
    aug: &'a Augmented,
    opened: Vec<Graph>,
    adj: RefCell<HashMap<u32, Vec<u32>>>,
    blocks: RefCell<HashMap<u32, (u32, u32, u32)>>,
    logical: RefCell<HashMap<u32, Vec<(u32, u32)>>>,
}

impl<'a> DegadgetOracle<'a> {
    pub fn new(
        oracle: &'a LocalGraphOracle,
        aug: &'a Augmented,
    ) -> Result<DegadgetOracle<'a>, AssemblyError> {
        if oracle.n() != aug.graph.n() {
            return Err(AssemblyError::BadParams(format!(
                "oracle has {} vertices, augmented graph has {}",
                oracle.n(),
                aug.graph.n()
            )));
        }
        let opened = aug
            .gadgets
            .gadgets
            .iter()
            .map(|g| g.graph.without_edge(g.designated.0, g.designated.1))
            .collect();
        Ok(DegadgetOracle {
            oracle,
            aug,
            opened,
            adj: RefCell::new(HashMap::new()),
            blocks: RefCell::new(HashMap::new()),
            logical: RefCell::new(HashMap::new()),
        })
    }

    fn nbrs(&self, v: u32) -> Vec<u32> {
        if let Some(cached) = self.adj.borrow().get(&v) {
            return cached.clone();
        }
        let got = self.oracle.neighbors(v).to_vec();
        self.adj.borrow_mut().insert(v, got.clone());
        got
    }

    pub fn is_original(&self, v: u32) -> bool {
        self.nbrs(v).len() >= self.aug.threshold
    }

    /// Resolve the gadget block entered through interior vertex a:
    /// returns (originals it attaches to, its color, block key). The
    /// key is the smallest interior id, stable across entry points.
    fn resolve_block(&self, a: u32) -> Result<(u32, u32, u32, u32), AssemblyError> {
        let mut interior = BTreeSet::from([a]);
        let mut attach: Vec<u32> = Vec::new();
        let mut queue = vec![a];
        while let Some(b) = queue.pop() {
            for w in self.nbrs(b) {
                if self.is_original(w) {
                    attach.push(w);
                } else if interior.insert(w) {
                    queue.push(w);
                }
            }
        }
        let key = *interior.first().expect("block is non-empty");
        if let Some(&(x, y, c)) = self.blocks.borrow().get(&key) {
            return Ok((x, y, c, key));
        }
        attach.sort_unstable();
        let [x, y] = attach[..] else {
            return Err(AssemblyError::MalformedComponent(format!(
                "gadget block near {a} attaches {} times, expected 2",
                attach.len()
            )));
        };
        let verts: Vec<u32> = interior.iter().copied().collect();
        let local = |v: u32| verts.binary_search(&v).expect("interior vertex") as u32 + 1;
        let mut edges = Vec::new();
        for &b in &verts {
            for w in self.nbrs(b) {
                if !self.is_original(w) && w > b {
                    edges.push((local(b), local(w)));
                }
            }
        }
        let shape = Graph::from_edges(verts.len(), edges)?;
        let color = self
            .opened
            .iter()
            .position(|g| is_isomorphic(g, &shape))
            .ok_or_else(|| {
                AssemblyError::MalformedComponent(format!(
                    "gadget block near {a} matches no gadget in the set"
                ))
            })? as u32
            + 1;
        self.blocks.borrow_mut().insert(key, (x, y, color));
        Ok((x, y, color, key))
    }

    /// Logical incident edges of an original vertex: one entry per
    /// gadget block hanging off it, as (other endpoint, color). Loops
    /// come back as (u, color).
    pub fn logical_edges(&self, u: u32) -> Result<Vec<(u32, u32)>, AssemblyError> {
        if let Some(cached) = self.logical.borrow().get(&u) {
            return Ok(cached.clone());
        }
        if !self.is_original(u) {
            return Err(AssemblyError::BadParams(format!(
                "vertex {u} sits inside a gadget, not on an original"
            )));
        }
        let mut out = Vec::new();
        let mut seen_loop_block = BTreeSet::new();
        for a in self.nbrs(u) {
            if self.is_original(a) {
                return Err(AssemblyError::MalformedComponent(format!(
                    "originals {u} and {a} are directly adjacent; every edge should pass through a gadget"
                )));
            }
            let (x, y, color, key) = self.resolve_block(a)?;
            if x == u && y == u {
                // A loop block is entered twice from u; report it once.
                if seen_loop_block.insert(key) {
                    out.push((u, color));
                }
            } else if x == u {
                out.push((y, color));
            } else if y == u {
                out.push((x, color));
            } else {
                return Err(AssemblyError::MalformedComponent(format!(
                    "block entered from {u} does not attach to it"
                )));
            }
        }
        out.sort_unstable();
        self.logical.borrow_mut().insert(u, out.clone());
        Ok(out)
    }

    pub fn base_neighbors(&self, u: u32) -> Result<Vec<u32>, AssemblyError> {
        Ok(self
            .logical_edges(u)?
            .into_iter()
            .filter(|&(w, c)| c == self.aug.base_color && w != u)
            .map(|(w, _)| w)
            .collect())
    }

    pub fn pf_neighbors(&self, u: u32) -> Result<Vec<u32>, AssemblyError> {
        Ok(self
            .logical_edges(u)?
            .into_iter()
            .filter(|&(w, c)| self.aug.pf_colors.contains(&c) && w != u)
            .map(|(w, _)| w)
            .collect())
    }

    /// Position of original vertex v in the assembled graph, read
    /// through the gadgets.
    pub fn order(&self, v: u32) -> Result<u32, AssemblyError> {
        let before = self.oracle.queries_used();
        let out = order_component(&self.aug.params, v, &mut |u| self.base_neighbors(u))?;
        let spent = self.oracle.queries_used() - before;
        assert!(
            spent <= self.aug.order_budget,
            "ordering through gadgets took {spent} queries, budget {}",
            self.aug.order_budget
        );
        Ok(out)
    }

    pub fn queries_used(&self) -> u64 {
        self.oracle.queries_used()
    }
}

/// Convenience wrapper: order one vertex of a (possibly relabeled)
/// augmented graph.
pub fn augmented_self_order(
    oracle: &LocalGraphOracle,
    aug: &Augmented,
    v: u32,
) -> Result<u32, AssemblyError> {
    DegadgetOracle::new(oracle, aug)?.order(v)
}

/// Inverse ordering: find the oracle vertex holding position i, given
/// any known original vertex s as a foothold. Orders s, routes from
/// s's position to i along the overlaid cycle-and-flip structure, and
/// walks the route in the oracle graph, re-ordering candidate
/// neighbors at every step.
pub fn local_reversed_self_order(
    oracle: &LocalGraphOracle,
    aug: &Augmented,
    i: u32,
    s: u32,
) -> Result<u32, AssemblyError> {
    let n = aug.params.n();
    if i == 0 || i as usize > n {
        return Err(AssemblyError::BadParams(format!("position {i} outside 1..={n}")));
    }
    if aug.lh << aug.lh != n {
        return Err(AssemblyError::BadParams(format!(
            "routing needs the full {}-position cover, but {n} vertices truncate it",
            aug.lh
        )));
    }
    let deg = DegadgetOracle::new(oracle, aug)?;
    let before = oracle.queries_used();
    let start = deg.order(s)?;
    let mut cur = s;
    if start != i {
        let route = find_path(aug.lh, start, i);
        for &next in &route[1..] {
            let mut found = None;
            for w in deg.pf_neighbors(cur)? {
                if deg.order(w)? == next {
                    found = Some(w);
                    break;
                }
            }
            cur = found.ok_or_else(|| {
                AssemblyError::MalformedComponent(format!(
                    "no routing edge toward position {next}"
                ))
            })?;
        }
    }
    let spent = oracle.queries_used() - before;
    assert!(
        spent <= aug.reversed_budget,
        "reverse ordering took {spent} queries, budget {}",
        aug.reversed_budget
    );
    Ok(cur)
}
