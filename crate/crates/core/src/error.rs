use thiserror::Error;

use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rows {0:?} are not a partition (must be non-increasing)")]
    InvalidPartition(Vec<usize>),

    #[error("cannot parse partition from {input:?}: {reason}")]
    ParsePartition { input: String, reason: String },

    #[error("partition {partition} does not fit in a {width}x{height} rectangle")]
    OutOfBox {
        partition: Partition,
        width: usize,
        height: usize,
    },

    #[error("partition {partition} has height {height}, exceeding the bound {bound}")]
    HeightViolation {
        partition: Partition,
        height: usize,
        bound: usize,
    },

    #[error("partition {partition} has width {width}, exceeding the bound {bound}")]
    WidthViolation {
        partition: Partition,
        width: usize,
        bound: usize,
    },

    #[error("{0}")]
    Constraint(String),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("parameter out of range: {0}")]
    ParameterRange(String),

    #[error("{partition} is not in the index set for d={d}, r={r}")]
    NotInWindow { partition: Partition, d: usize, r: usize },

    #[error("wrong bundle side or rank: {0}")]
    SideMismatch(String),

    #[error("localization parameters are degenerate: {0}")]
    DegenerateParameters(String),

    #[error("internal consistency failure: {0}")]
    Inconsistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
