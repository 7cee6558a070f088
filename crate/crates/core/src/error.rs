use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error("partition length {length} exceeds rank {rank}")]
    RankTooSmall { length: usize, rank: usize },
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("size gap must be even and nonnegative, got {0}")]
    ParityViolation(i64),
    #[error("division left a nonzero remainder")]
    InexactDivision,
    #[error("expected an integral result, found a fractional coefficient")]
    NonIntegral,
    #[error("not a character: {0}")]
    NotACharacter(String),
    #[error("alphabet entries must be single monomials of equal arity")]
    NotAMonomial,
    #[error("alphabet must be nonempty")]
    EmptyAlphabet,
    #[error("bad serialized value: {0}")]
    Serial(String),
}

pub type Result<T> = std::result::Result<T, Error>;
