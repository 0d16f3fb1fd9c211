#[derive(Debug, thiserror::Error)]
pub enum PermsError {
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("search for {what} exhausted its budget of {budget} candidates (found {found})")]
    SearchExhausted { what: &'static str, budget: usize, found: usize },
}
