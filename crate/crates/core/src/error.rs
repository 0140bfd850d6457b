use thiserror::Error;

use crate::algebra::Algebra;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty Kupisch series")]
    EmptyInput,
    #[error("invalid Kupisch series: {0}")]
    InvalidKupisch(String),
    #[error("could not parse algebra: {0}")]
    Parse(String),
    #[error("vertex {vertex} out of range 1..={rank}")]
    VertexOutOfRange { vertex: usize, rank: usize },
    #[error("no uniserial module with top {top} and length {length}")]
    InvalidModule { top: usize, length: u32 },
    #[error("operation needs a cyclic Nakayama algebra")]
    NotCyclic,
    #[error("module with top {top} and length {length} is not filtered by the base set")]
    NotFiltered { top: usize, length: u32 },
    #[error("epsilon chain did not stabilise within {} steps", chain.len())]
    StepLimitExceeded { chain: Vec<Algebra> },
    #[error("reverse construction failed its self-check: {0}")]
    SelfCheckFailed(String),
    #[error("unsupported input: {0}")]
    UnsupportedInput(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
}

pub type Result<T> = std::result::Result<T, Error>;
