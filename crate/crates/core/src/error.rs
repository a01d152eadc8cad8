use thiserror::Error;

use crate::poset::LambdaPoint;
use crate::rootsys::{LieType, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid simple type {family}{rank}")]
    InvalidType { family: char, rank: usize },

    #[error("weight {weight} has {found} labels, expected rank {expected}")]
    RankMismatch {
        weight: String,
        expected: usize,
        found: usize,
    },

    #[error("type mismatch: {left} vs {right}")]
    TypeMismatch { left: LieType, right: LieType },

    #[error("weight {0} is not dominant")]
    NotDominant(Weight),

    #[error("rank {rank} exceeds the limit {max} for this operation")]
    RankTooLarge { rank: usize, max: usize },

    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("point {point} has grade above {bound}")]
    GradeExceeds { point: LambdaPoint, bound: u32 },

    #[error("{point} is not a point of the set")]
    NotInGamma { point: LambdaPoint },

    #[error("not interval closed: {low} < {high} but {missing} is missing")]
    NotIntervalClosed {
        low: LambdaPoint,
        high: LambdaPoint,
        missing: LambdaPoint,
    },

    #[error("degree {degree} exceeds the configured maximum {max}")]
    DegreeTooLarge { degree: usize, max: usize },

    #[error("empty interval: {low} is not below {high}")]
    EmptyInterval { low: LambdaPoint, high: LambdaPoint },

    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),

    #[error("negative multiplicity {value} at {weight} ({context})")]
    NegativeMultiplicity {
        weight: Weight,
        value: i64,
        context: &'static str,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
