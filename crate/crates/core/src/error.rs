use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts are not weakly decreasing: {0:?}")]
    NotAPartition(Vec<u32>),
    #[error("inner shape {inner} is not contained in outer shape {outer}")]
    NotASkewShape { outer: String, inner: String },
    #[error("index {i} out of range 1..={n}")]
    IndexOutOfRange { i: usize, n: usize },
    #[error("left shift needs every coordinate >= 1 at part count {k}")]
    ShiftUnderflow { k: usize },
    #[error("shape with {k} parts and first part {first} does not fit in ambient {n}")]
    ShapeDoesNotFit { first: u32, k: usize, n: usize },
    #[error("index sets have different cardinalities: {0} vs {1}")]
    CardinalityMismatch(usize, usize),
    #[error("ambient mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("elements must be strictly increasing in [1, {ambient}]: {elems:?}")]
    BadIndexSet { elems: Vec<u32>, ambient: usize },
    #[error("not a permutation of 1..={n}: {one_line:?}")]
    NotAPermutation { one_line: Vec<usize>, n: usize },
    #[error("matrix size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("bound exceeded: {what} = {got} is limited to {max}")]
    BoundExceeded {
        what: &'static str,
        got: usize,
        max: usize,
    },
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
