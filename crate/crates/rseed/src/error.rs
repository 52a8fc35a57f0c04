use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("illegal simply-laced type {family}{rank}")]
    IllegalType { family: String, rank: i64 },

    #[error("cannot parse Dynkin type `{0}`")]
    BadTypeName(String),

    #[error("color {color} is not a vertex of a rank {rank} diagram")]
    InvalidColor { color: usize, rank: usize },

    #[error("word is not reduced: the prefix of length {prefix} already drops in length")]
    NotReduced { prefix: usize },

    #[error("element is not below the word in Bruhat order")]
    NotLessOrEqual,

    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("word of length {len} is not a reduced word of the longest element (length {expected})")]
    NotLongest { len: usize, expected: usize },

    #[error("word is not a left completion of the given word")]
    NotACompletion,

    #[error("negative coordinate n_{index} = {value}")]
    NegativeCoordinate { index: usize, value: i64 },

    #[error("vertex {0} is frozen")]
    FrozenVertex(usize),

    #[error("vertex {0} is not in the quiver")]
    UnknownVertex(usize),

    #[error("configuration at vertex {vertex} is not in the tables: {detail}")]
    Unclassifiable { vertex: usize, detail: String },

    #[error("both exchange candidates at vertex {vertex} are nonnegative and differ")]
    AmbiguousBranch { vertex: usize },

    #[error("no exchange candidate at vertex {vertex} is nonnegative")]
    NoValidBranch { vertex: usize },

    #[error("invariant violated after step {step}: {detail}")]
    InvariantViolation { step: usize, detail: String },
}
