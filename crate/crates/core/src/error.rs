use std::fmt;

use thiserror::Error;

/// Why a single-digit change was refused.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoveViolation {
    /// Index outside `1..=n`.
    NoSuchDigit,
    /// Delta was not `+1` or `-1`.
    BadDelta,
    /// The digit would leave `0..=3`.
    DigitBound,
    /// The result would put a non-3 digit to the right of a 3.
    Validity,
    /// The maze turn is blocked by the digit to the right.
    MazeTurn { blocker: usize, needed: u8 },
}

impl MoveViolation {
    /// Short machine-readable name.
    pub fn code(&self) -> &'static str {
        match self {
            MoveViolation::NoSuchDigit => "no_such_digit",
            MoveViolation::BadDelta => "bad_delta",
            MoveViolation::DigitBound => "digit_bound",
            MoveViolation::Validity => "validity",
            MoveViolation::MazeTurn { .. } => "maze_turn",
        }
    }
}

impl fmt::Display for MoveViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveViolation::NoSuchDigit => f.write_str("no digit at that index"),
            MoveViolation::BadDelta => f.write_str("delta must be +1 or -1"),
            MoveViolation::DigitBound => f.write_str("digit would leave 0..3"),
            MoveViolation::Validity => {
                f.write_str("validity: only 3 may appear to the right of a 3")
            }
            MoveViolation::MazeTurn { blocker, needed } => write!(
                f,
                "maze-turn: locked by digit {blocker} (turn needs it at {needed})"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZigguError {
    #[error("empty state")]
    Empty,
    #[error("bad digit {ch:?} at column {pos}: expected 0..3")]
    BadDigit { ch: char, pos: usize },
    #[error("state {state} violates {rule}")]
    InvalidState { state: String, rule: &'static str },
    #[error("illegal move ({index},{delta:+}) at {state}: {reason}")]
    IllegalMove {
        state: String,
        index: usize,
        delta: i8,
        reason: MoveViolation,
    },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("{what} = {value} out of range ({allowed})")]
    OutOfRange {
        what: &'static str,
        value: String,
        allowed: String,
    },
    #[error("invalid maze vector: {0}")]
    InvalidMaze(String),
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("{0} is not supported for this kind")]
    Unsupported(&'static str),
    #[error("step budget of {0} exhausted")]
    BudgetExhausted(usize),
}

pub type Result<T> = std::result::Result<T, ZigguError>;

pub(crate) fn out_of_range(
    what: &'static str,
    value: impl fmt::Display,
    allowed: impl fmt::Display,
) -> ZigguError {
    ZigguError::OutOfRange {
        what,
        value: value.to_string(),
        allowed: allowed.to_string(),
    }
}
