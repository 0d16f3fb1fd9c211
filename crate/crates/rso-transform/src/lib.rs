//! Rewirings that carry a certified graph from one shape to another
//! without surrendering its guarantees: normalization into eligible
//! colored form, gadget replacement that trades colors for structure,
//! direction removal through auxiliary vertices, padding to exact
//! regularity, superimposing, and the cloud expansion that turns a
//! dense graph into a bounded-degree one.

mod arcs;
mod clouds;
mod compose;
mod eligibility;
mod error;
mod gadget;
mod regular;

pub use arcs::directed_to_undirected;
pub use clouds::degree_reduce_dense;
pub use compose::{compact_colors, disjoint_union_with_cross, superimpose};
pub use eligibility::eligibility_pass;
pub use error::TransformError;
pub use gadget::{find_gadgets, gadgetize, gadgetize_mixed, Gadget, GadgetSet};
pub use regular::make_regular_expanding;
