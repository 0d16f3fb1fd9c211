use rso_graph::GraphError;
use rso_perms::PermsError;
use rso_transform::TransformError;
use rso_verify::VerifyError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AssemblyError {
    #[error("search exhausted after {budget} candidates looking for {what}")]
    SearchExhausted { what: &'static str, budget: usize },
    #[error("component span {span} does not divide {n}")]
    NotDivisible { n: usize, span: usize },
    #[error("{0}")]
    BadParams(String),
    #[error("oracle graph is not a relabeling of the assembled graph: {0}")]
    MalformedComponent(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Perms(#[from] PermsError),
    #[error(transparent)]
    Transform(#[from] TransformError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}
