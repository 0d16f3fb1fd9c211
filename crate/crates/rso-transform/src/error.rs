use thiserror::Error;

use rso_graph::GraphError;

#[derive(Debug, Error)]
pub enum TransformError {
    #[error("vertex {v} has degree {degree}, above the allowed {limit}")]
    DegreeTooHigh { v: u32, degree: usize, limit: usize },
    #[error("color {color} exceeds the allowed maximum {limit}")]
    ColorTooHigh { color: u32, limit: u32 },
    #[error("recoloring collides on {{{u},{v}}}: color {color} assigned twice")]
    ColorCollision { u: u32, v: u32, color: u32 },
    #[error("input must be eligible: {0}")]
    Ineligible(String),
    #[error("no connected asymmetric graph exists on {k} vertices")]
    NoGadgetsThisSmall { k: usize },
    #[error("gadget search exhausted {attempts} candidates, found {found} of {want}")]
    GadgetSearchExhausted { attempts: u64, found: usize, want: usize },
    #[error("invalid gadget set: {0}")]
    BadGadgetSet(String),
    #[error("vertex {v} has {count} incident arcs, need at least 3")]
    TooFewArcs { v: u32, count: usize },
    #[error("two arcs share endpoints and color")]
    DuplicateArc,
    #[error("expected a graph on {expected} vertices, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("graph on {n} vertices is too small, need at least {need}")]
    TooSmall { n: usize, need: usize },
    #[error("degree target {d_target} below max degrees of the inputs ({need})")]
    TargetTooSmall { d_target: usize, need: usize },
    #[error("n * d_target = {n} * {d_target} is odd, no regular graph exists")]
    OddTotalDegree { n: usize, d_target: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}
