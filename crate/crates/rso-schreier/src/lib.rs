//! Schreier-style graphs from permutation families: the primary graph
//! draws a colored arc along each permutation, the secondary graph
//! follows ordered pairs, and expansion of the latter certifies
//! robustness of the former. Includes the projective-line action of
//! determinant-1 matrices as the concrete instantiation.

mod condition;
mod error;
mod family;
mod sl2;

pub use condition::{check_sufficient_condition, SufficientConditionReport, EXPANSION_EXACT_LIMIT};
pub use error::SchreierError;
pub use family::{pair_id, pair_of, primary_graph, secondary_graph, PermutationFamily};
pub use sl2::{sl2_default, sl2_projective_perms, SL2_GENERATORS};
