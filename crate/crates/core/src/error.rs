use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alternative {alt} is out of range for m = {m}")]
    UnknownAlternative { alt: usize, m: usize },

    #[error("k = {k} is out of range [1, {m}]")]
    RankOutOfRange { k: usize, m: usize },

    #[error("not a permutation of 0..{m}: {detail}")]
    NotAPermutation { m: usize, detail: String },

    #[error("profile has no individuals")]
    EmptyProfile,

    #[error("at most {max} alternatives are supported, got {m}")]
    TooManyAlternatives { m: usize, max: usize },

    #[error("ordering {index} has length {len}, expected {m}")]
    LengthMismatch { index: usize, len: usize, m: usize },

    #[error("choice set must be non-empty")]
    EmptyChoiceSet,

    #[error("malformed header: {0}")]
    MalformedHeader(String),

    #[error("expected {expected} ballot rows, found {found}")]
    WrongRowCount { expected: usize, found: usize },

    #[error("row {row}: {detail}")]
    MalformedRow { row: usize, detail: String },

    #[error("row {row} is not a permutation of 0..{m}: {detail}")]
    RowNotAPermutation { row: usize, m: usize, detail: String },

    #[error("index vector has length {len}, profile has n = {n}")]
    BallotLengthMismatch { len: usize, n: usize },

    #[error("ballot size b[{index}] = {value} is outside [1, {m}]")]
    BallotOutOfRange { index: usize, value: usize, m: usize },

    #[error("unknown rule `{0}`")]
    UnknownRule(String),

    #[error("rule `approval` needs an index vector")]
    MissingBallots,

    #[error("infeasible: {0}")]
    Infeasible(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("guard exceeded: {0} (pass the override flag to run anyway)")]
    GuardExceeded(String),

    #[error("rule `{0}` is not supported in this mode")]
    UnsupportedMode(String),

    #[error("internal check failed: {0}")]
    CheckFailed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
