use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("no removable cells")]
    NoRemovableCells,

    #[error("size mismatch: expected {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("formula requires n >= 2j (n = {n}, j = {j})")]
    FormulaRange { n: usize, j: usize },

    #[error("closed form only asserted for n >= 2rj (n = {n}, r = {r}, j = {j})")]
    ClosedFormRange { n: usize, r: usize, j: usize },

    #[error("bead count {beads} is smaller than the number of parts {parts}")]
    TooFewBeads { beads: usize, parts: usize },

    #[error("oracle is desk-scale only (n = {n}, limit {limit})")]
    OracleTooLarge { n: usize, limit: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
