//! Far-apart permutation collections and the small binary codes that
//! generate them locally, plus the workspace's seeded randomness
//! helpers.

mod code;
mod error;
pub mod seeded;

pub use code::{
    code_based_perm, code_perm_family, greedy_far_collection, make_small_code, perm_distance,
    repetition_code, BinaryCode,
};
pub use error::PermsError;
