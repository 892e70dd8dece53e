use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate entry {0} in permutation")]
    DuplicateEntry(i32),

    #[error("permutation length {len} exceeds the maximum {max}")]
    LengthLimit { len: usize, max: usize },

    #[error("cannot parse permutation from {text:?}: {reason}")]
    BadPermutationText { text: String, reason: String },

    #[error("cannot parse barred pattern from {text:?}: {reason}")]
    BadBarredText { text: String, reason: String },

    #[error("index {index} out of range for permutation of length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("occurrence indices must be strictly increasing")]
    IndicesNotIncreasing,

    #[error("barred flags have length {flags} but the pattern has {len} entries")]
    BarredFlagMismatch { flags: usize, len: usize },

    #[error("pattern of length {0} is too long for pattern-set operations (max 16)")]
    PatternTooLong(usize),

    #[error("the forbidden set is empty; no bounds can be derived")]
    EmptyForbiddenSet,

    #[error("k must be at least 1")]
    BadPassCount,

    #[error("cap {cap} exceeds the derived bound {bound} for {what}")]
    CapExceedsBound {
        cap: usize,
        bound: usize,
        what: &'static str,
    },

    #[error("caps must be positive")]
    ZeroCap,

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error(
        "enumerating permutations of length {requested} exceeds the budget \
         (limit {limit}); raise the limit explicitly to proceed"
    )]
    EnumerationBudget { requested: usize, limit: usize },

    #[error("pair file, line {line}: {reason}")]
    PairFile { line: usize, reason: String },

    #[error("reduction changed two-avoidance membership: {0}")]
    ReductionNotConservative(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
