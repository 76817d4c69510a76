use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("bit strings have different lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },

    #[error("bit string length must be at least 1")]
    EmptyBitString,

    #[error("invalid bit string {0:?}: only '0' and '1' are allowed")]
    InvalidBitString(String),

    #[error("word {word:#x} does not fit in {len} bits")]
    WordTooWide { word: u64, len: usize },

    #[error(
        "rank {rank} out of range for weight {weight} strings of length {len} (class size {size})"
    )]
    RankOutOfRange {
        len: usize,
        weight: usize,
        rank: String,
        size: String,
    },

    #[error("weight {weight} exceeds length {len}")]
    WeightOutOfRange { len: usize, weight: usize },

    #[error("label {label} out of range 1..={max}")]
    LabelOutOfRange { label: String, max: String },

    #[error("n = {n} exceeds the limit of {max} for {what}")]
    DimensionTooLarge {
        what: &'static str,
        n: usize,
        max: usize,
    },

    #[error("{what} requires n >= {min}, got n = {n}")]
    OutOfScope {
        what: &'static str,
        n: usize,
        min: usize,
    },

    #[error("labeling is not a bijection onto 1..={expected}: {reason}")]
    NotBijective { expected: usize, reason: String },

    #[error("w1 = {0} has even weight; the pair formula needs an odd-weight w1")]
    ParityViolation(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid solve budget: {0}")]
    InvalidBudget(String),

    #[error("invalid labeling input: {0}")]
    InvalidLabeling(String),
}
