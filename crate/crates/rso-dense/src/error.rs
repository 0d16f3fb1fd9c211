use rso_graph::GraphError;
use rso_transform::TransformError;
use rso_verify::VerifyError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DenseError {
    #[error("search exhausted after {budget} candidates looking for {what}")]
    SearchExhausted { what: String, budget: usize },
    #[error("{0}")]
    BadParams(String),
    #[error("parameters infeasible: {0}")]
    Infeasible(String),
    #[error("input rejected: {0}")]
    Rejected(String),
    #[error("measured {what} = {measured} exceeds the stated bound {bound}")]
    BoundExceeded { what: &'static str, measured: f64, bound: f64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Transform(#[from] TransformError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}
