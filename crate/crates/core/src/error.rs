use thiserror::Error;

use crate::partition::Cell;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a partition: {0}")]
    NotAPartition(String),

    #[error("inner shape {inner} is not contained in outer shape {outer}")]
    NotContained { inner: String, outer: String },

    #[error("not a tableau: {0}")]
    InvalidTableau(String),

    #[error("entry {0} already present in tableau")]
    DuplicateEntry(usize),

    #[error("cell {0} is not a removable corner")]
    NotACorner(Cell),

    #[error("oscillating tableau step {step}: {reason}")]
    InvalidOscillating { step: usize, reason: String },

    #[error("letter {letter} out of range for rank {n}")]
    LetterOutOfRange { letter: i32, n: usize },

    #[error("word is not highest weight: prefix of length {prefix} has weight {weight:?}")]
    NotHighestWeight { prefix: usize, weight: Vec<i64> },

    #[error("not a fixed-point-free involution: {0}")]
    InvalidInvolution(String),

    #[error("oscillating tableau is not {n}-symplectic (step {step} has {rows} rows)")]
    NotSymplectic { n: usize, step: usize, rows: usize },

    #[error("entry sets do not partition 1..={r}: {reason}")]
    NotASetPartition { r: usize, reason: String },

    #[error("not a {n}-symplectic Littlewood-Richardson tableau: {reason}")]
    InvalidLrTableau { n: usize, reason: String },

    #[error("inconsistent growth cell: {0}")]
    InconsistentCell(String),

    #[error("seed permutation does not insert to the required tableau: {0}")]
    WrongSeed(String),

    #[error("descent set {set:?} is not a subset of 1..{r}")]
    DescentOutOfRange { set: Vec<usize>, r: usize },

    #[error("shape {shape} has more than {n} rows")]
    TooManyRows { shape: String, n: usize },
}
