//! Core data model for the self-ordering toolkit: simple graphs, colored
//! multigraphs (directed and undirected), permutations acting on them,
//! symmetric-difference kernels, local-representation oracles, and the
//! JSON / edge-list serialization shared by every other crate.

mod colored;
mod directed;
mod error;
mod graph;
mod localrep;
mod oracle;
mod perm;
mod symdiff;

pub mod io;

pub use colored::ColoredMultiGraph;
pub use directed::DirectedColoredMultiGraph;
pub use error::GraphError;
pub use graph::Graph;
pub use localrep::{local_representation, LocalRep};
pub use oracle::LocalGraphOracle;
pub use perm::Permutation;
pub use symdiff::{
    apply_permutation, apply_permutation_colored, apply_permutation_directed,
    colored_multiset_symdiff, colored_symdiff, directed_colored_symdiff,
    directed_multiset_symdiff, symdiff,
};
