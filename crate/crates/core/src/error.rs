use thiserror::Error;

pub type Result<T, E = LrcError> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LrcError {
    #[error("operands live in different polynomial rings")]
    MixedRing,
    #[error("polynomial is not divisible by a{0}")]
    NotDivisible(usize),
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid field specification: {0}")]
    InvalidField(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid quasi-Cartan matrix: {0}")]
    InvalidMatrix(String),
    #[error("letter {letter} out of range for rank {rank}")]
    LetterOutOfRange { letter: usize, rank: usize },
    #[error("no braid move between s{0} and s{1}: their product has infinite order")]
    InfiniteOrderMisuse(usize, usize),
    #[error("word {word} is not a reduced word for {element}")]
    NotReducedFor { word: String, element: String },
    #[error("base word {0} is not an admissible sequence")]
    NonAdmissibleBase(String),
    #[error("position sets are not nested: {0}")]
    NotNested(String),
    #[error("word {0} has repeated letters")]
    NotRepetitionFree(String),
    #[error("|L| + |M| = {have} is smaller than the word length {m}")]
    SizeMismatch { have: usize, m: usize },
    #[error("length {len} exceeds the configured cap {cap}")]
    TooLarge { len: usize, cap: usize },
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("config error: {0}")]
    Config(String),
}
