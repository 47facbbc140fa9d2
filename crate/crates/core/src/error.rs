use thiserror::Error;

use crate::term::Cell;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("index ({row}, {col}) outside the {rows}x{cols} matrix")]
    OutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },

    #[error("invalid minor: {0}")]
    InvalidMinor(String),

    #[error("minor {inner} is not strictly contained in {outer}")]
    NotContained { outer: String, inner: String },

    #[error("box ({p}, {q}) is not in the Rothe diagram")]
    NotInDiagram { p: usize, q: usize },

    #[error("block is not {0}; the length criterion needs a block of the matching kind")]
    KindMismatch(&'static str),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("divisor leading coefficient is {0}, only units are supported")]
    NonUnitLeadingCoefficient(String),

    #[error("term {0} is not divisible by the divisor's leading term")]
    NotDivisible(String),

    #[error("term {0} does not occur in the polynomial")]
    TermNotPresent(String),

    #[error("cannot take the leading term of the zero polynomial")]
    ZeroPolynomial,

    #[error("scale guard exceeded: {what} = {value} > {limit} (set DETGB_MAX_SCALE to override)")]
    ScaleGuard {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("invalid ladder: {0}")]
    InvalidLadder(String),

    #[error("one-sided ladder corners must satisfy 1 <= a_1 <= ... <= a_k <= m and n >= b_1 >= ... >= b_k >= 1: {0}")]
    CornerMonotonicity(String),

    #[error("one-sided ladder sizes must satisfy 0 <= a_1-r_1 < a_2-r_2 < ... and b_1-r_1 > b_2-r_2 > ... >= 0: {0}")]
    SizeStaircase(String),

    #[error("no vexillary permutation of size {0} matches the ladder data")]
    NoVexillaryMatch(usize),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("cell {0} is outside the variable order")]
    UnknownVariable(Cell),
}

pub type Result<T> = std::result::Result<T, Error>;
