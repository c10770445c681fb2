use thiserror::Error;

/// Errors raised by word parsing, interval construction and the closed forms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input: expected a nonempty word")]
    EmptyWord,
    #[error("invalid character {ch:?} at position {position}")]
    InvalidCharacter { ch: char, position: usize },
    #[error("prefix ending at position {position} has more D than U")]
    PrefixViolation { position: usize },
    #[error("unbalanced word: {ups} U steps vs {downs} D steps")]
    Unbalanced { ups: usize, downs: usize },
    #[error("word too long: semilength {semilength} exceeds the representable maximum {max}")]
    TooLong { semilength: usize, max: usize },
    #[error(
        "limit exceeded: {what} {requested} is above the ceiling {limit} (raise it with --limit)"
    )]
    LimitExceeded {
        what: &'static str,
        requested: usize,
        limit: usize,
    },
    #[error("invalid shape parameters: {0}")]
    InvalidShapeParameters(String),
    #[error("{bottom} is not contained in {top}")]
    NotComparable { bottom: String, top: String },
    #[error("rank {rank} is outside the interval ranks {min}..={max}")]
    RankOutOfRange { rank: usize, min: usize, max: usize },
    #[error("{0} is not an element of the interval")]
    ElementNotInInterval(String),
    #[error("{formula}: argument out of range ({detail})")]
    ArgumentOutOfRange {
        formula: &'static str,
        detail: String,
    },
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("invalid Motzkin word: {0}")]
    InvalidMotzkin(String),
    #[error("{0} does not have exactly two peaks")]
    NotTwoPeak(String),
    #[error("square (row {row}, col {col}, side {side}) does not fit in a {rows}x{cols} grid")]
    OutOfGrid {
        row: usize,
        col: usize,
        side: usize,
        rows: usize,
        cols: usize,
    },
}

impl Error {
    /// Resource-limit errors as opposed to domain errors.
    pub fn is_limit(&self) -> bool {
        matches!(self, Error::LimitExceeded { .. } | Error::TooLong { .. })
    }

    pub(crate) fn out_of_range(formula: &'static str, detail: impl Into<String>) -> Self {
        Error::ArgumentOutOfRange {
            formula,
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
