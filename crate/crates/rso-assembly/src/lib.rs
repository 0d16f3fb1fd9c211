//! Builds large self-ordered graphs of bounded degree out of small
//! ones, and orders their vertices by local exploration alone.
//!
//! The pipeline has three stages. First, seeded search produces small
//! asymmetric base graphs whose robustness is certified exactly
//! ([`find_rso_small`], [`find_base_pair`]). Second, many copies of a
//! fixed two-base component are strung together, each copy carrying a
//! different matching permutation so the copies stay pairwise
//! non-isomorphic ([`ThreeStepParams`], [`assemble`]). When the
//! permutations come from a binary code, any vertex's neighborhood is
//! computable straight from its index ([`local_neighbors`]), and a
//! handful of neighborhood queries recover a vertex's position in the
//! canonical labeling even when the graph arrives relabeled
//! ([`local_self_order`]).
//!
//! The third stage runs the other way: to find the vertex that holds a
//! given position, a routing graph of cycle-and-flip moves is overlaid
//! on the same vertices and hidden inside degree-separated gadgets
//! ([`augment_for_local_ordering`]), after which
//! [`local_reversed_self_order`] walks a short route from any known
//! foothold while [`DegadgetOracle`] reads the colors back through the
//! gadgets.

mod augment;
mod error;
mod local;
mod params;
mod pathfinder;
mod step1;

pub use augment::{
    augment_for_local_ordering, augmented_self_order, local_reversed_self_order, Augmented,
    DegadgetOracle,
};
pub use error::AssemblyError;
pub use local::{local_neighbors, local_self_order, LocalGraphOracle, LocalOrder};
pub use params::{assemble, component_graph, PermSource, ThreeStepParams};
pub use pathfinder::{find_path, path_finder_graph};
pub use step1::{find_base_pair, find_rso_small, two_cycle_matching_graph};
