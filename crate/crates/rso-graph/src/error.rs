use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {v} out of range 1..={n}")]
    VertexOutOfRange { v: u32, n: usize },
    #[error("self-loop at vertex {v} not allowed in a simple graph")]
    SelfLoop { v: u32 },
    #[error("duplicate edge {{{u},{v}}}")]
    DuplicateEdge { u: u32, v: u32 },
    #[error("permutation images are not a bijection of 1..={n}: {reason}")]
    NotABijection { n: usize, reason: String },
}
