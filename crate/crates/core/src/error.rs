use num_rational::Rational64;
use thiserror::Error;

/// Every fallible operation in the crate reports through this type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("cannot combine series with offsets {left} and {right}")]
    OffsetMismatch { left: Rational64, right: Rational64 },

    #[error("polynomial division is not exact (nonzero remainder)")]
    InexactDivision,

    #[error("invalid partition {0:?}: parts must be weakly decreasing")]
    InvalidPartition(Vec<i64>),

    #[error("inner shape {inner:?} is not contained in outer shape {outer:?}")]
    NotContained { outer: Vec<u32>, inner: Vec<u32> },

    #[error("skew shape is disconnected: square (row {0}, col {1}) is not reachable")]
    Disconnected(usize, usize),

    #[error("skew shape contains a 2x2 block with top-left square (row {0}, col {1})")]
    TwoByTwo(usize, usize),

    #[error(
        "column with top square (row {row}, col {col}) has height {height}, exceeding n = {n}"
    )]
    ColumnTooTall {
        row: usize,
        col: usize,
        height: u32,
        n: u32,
    },

    #[error("strip is not reduced: its leftmost column has height n = {0}")]
    NotReduced(u32),

    #[error("rapidity sequence has {n} consecutive entries ending at {at}")]
    ConsecutiveRun { n: u32, at: u64 },

    #[error("invalid rapidity sequence: {0}")]
    InvalidRapidity(String),

    #[error("invalid motif: {0}")]
    InvalidMotif(String),

    #[error("mode sequence skips value {0}")]
    ModeGap(u32),

    #[error("partition has {parts} parts but only {spinons} spinons")]
    TooManyParts { parts: usize, spinons: u32 },

    #[error("pairing against the vacuum does not converge: {0}")]
    DivergentPairing(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
