use thiserror::Error;

use crate::Cell;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a permutation: {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("cannot parse permutation from {0:?}")]
    ParsePermutation(String),
    #[error("lehmer code entry {value} at position {position} exceeds {max}")]
    CodeOutOfRange { position: usize, value: usize, max: usize },
    #[error("letter {letter} is outside [1, {max}]")]
    LetterOutOfRange { letter: usize, max: usize },
    #[error("size {n} exceeds the configured limit {limit}")]
    SizeLimit { n: usize, limit: usize },
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("the identity permutation has no maximal corner")]
    IdentityInput,
    #[error("{0:?} is not a subset of the pivot rows {1:?}")]
    NotPivotSubset(Vec<usize>, Vec<usize>),
    #[error("invalid alternating sign matrix: {0}")]
    InvalidAsm(String),
    #[error("invalid corner sum table: {0}")]
    InvalidCornerSum(String),
    #[error("invalid ice configuration: {0}")]
    InvalidIce(String),
    #[error("invalid bumpless pipe dream: {0}")]
    InvalidBpd(String),
    #[error("invalid partition tiling: {0}")]
    InvalidPartitionTiling(String),
    #[error("entry at {0:?} is not a removable -1")]
    NotRemovable(Cell),
    #[error("cell {0:?} is not in the diagram")]
    NotInDiagram(Cell),
    #[error("invalid pivot selection {1:?} for cell {0:?}")]
    InvalidPivots(Cell, Vec<usize>),
    #[error("tile at the maximal corner {0:?} is neither blank nor an upward elbow")]
    TransitionTile(Cell),
    #[error("permutation {0} is not vexillary")]
    NotVexillary(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("partition {0:?} does not fit in the staircase of size {1}")]
    NotInStaircase(Vec<usize>, usize),
    #[error("bumpless pipe dream is not Hecke")]
    NotHecke,
    #[error("invalid ordinary pipe dream: {0}")]
    InvalidPipeDream(String),
    #[error("malformed input: {0}")]
    Parse(String),
}
