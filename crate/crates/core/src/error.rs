use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("not a permutation in one-line notation: {0:?}")]
    InvalidPermutation(Vec<u8>),
    #[error("generator index {index} out of range 1..={rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("word is already reduced")]
    AlreadyReduced,
    #[error("empty input set")]
    EmptyInput,
    #[error("rank must be at least 1, got {0}")]
    InvalidRank(usize),
    #[error("{what}: requested size {requested} exceeds budget {limit}")]
    BudgetExceeded {
        what: &'static str,
        requested: usize,
        limit: usize,
    },
    #[error("invalid index set {entries:?} for rank {rank}")]
    InvalidXiIndex { entries: Vec<usize>, rank: usize },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("sequence precondition violated for (t, s) = ({t}, {s})")]
    SequencePrecondition { t: usize, s: usize },
    #[error("rigidity sequence did not terminate within {cap} steps")]
    SequenceDiverged { cap: usize },
    #[error("criterion inconsistency: {0}")]
    Inconsistent(String),
    #[error("presentation error: {0}")]
    Presentation(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("algebra is not finite dimensional below degree {cap}")]
    NotNilpotent { cap: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not a tau-rigid pair: {0}")]
    NotTauRigid(String),
}
