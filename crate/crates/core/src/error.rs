use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree {n} is outside the admissible range: {reason}")]
    Domain { n: u64, reason: String },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("part {0} is not a power of two")]
    NotPowerOfTwo(u64),

    #[error("malformed permutation text {text:?}: {reason}")]
    Parse { text: String, reason: String },

    #[error("point {0} appears twice")]
    RepeatedPoint(usize),

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("{what} exceeds the configured cap of {cap}")]
    CapExceeded { what: String, cap: u64 },

    #[error("unknown catalog entry {name:?} for degree {n}")]
    UnknownCatalogId { n: u32, name: String },

    #[error("catalog line {line}: {reason}")]
    Catalog { line: usize, reason: String },

    #[error("corpus line {line}: {reason}")]
    Corpus { line: usize, reason: String },

    #[error("invalid family: {0}")]
    InvalidFamily(String),

    #[error("formula hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("set cover instance is infeasible: element {0} has no candidate set")]
    Infeasible(u64),

    #[error("malformed instance dump at line {line}: {reason}")]
    InstanceFormat { line: usize, reason: String },

    #[error("subgroup family contains non-maximal subgroups: {0}")]
    NotMaximal(String),

    #[error("unknown check {0:?}")]
    UnknownCheck(String),

    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
