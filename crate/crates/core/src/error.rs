use thiserror::Error;

/// Errors raised by the library. Partial crystal operators return `None`
/// instead of an error.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown or unsupported Cartan type `{0}`")]
    UnknownType(String),
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("coweight {0} is not dominant")]
    NotDominant(String),
    #[error("word {0} is not reduced")]
    NotReduced(String),
    #[error("word {0} does not spell the longest element")]
    NotLongestWord(String),
    #[error("words {0} and {1} spell different elements")]
    DifferentElements(String, String),
    #[error("{kind} move not applicable at offset {offset} of word {word}")]
    MoveNotApplicable {
        kind: &'static str,
        offset: usize,
        word: String,
    },
    #[error("Lusztig datum has {got} entries, word has length {expected}")]
    LengthMismatch { expected: usize, got: usize },
    /// `position` is one-based.
    #[error("Lusztig datum entry {position} is negative ({value})")]
    NegativeEntry { position: usize, value: i64 },
    #[error("position sequence {0} is not a reduced subword")]
    InvalidPositions(String),
    #[error("operation requires a datum in B(infinity)")]
    RequiresInfinity,
    #[error("operation requires a datum in B(lambda)")]
    RequiresHighestWeight,
    #[error("mismatched bases: {0}")]
    MismatchedBase(String),
    #[error("size gate exceeded: {what} is {size}, limit {limit}")]
    SizeGate {
        what: &'static str,
        size: u128,
        limit: u128,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
