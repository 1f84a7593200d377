use thiserror::Error;

use crate::ktheory::{Family, GroupSpec};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("binomial coefficient with negative top argument {0}")]
    NegativeBinomialTop(i64),

    #[error("Bernoulli index {0} is not a nonnegative even integer")]
    BadBernoulliIndex(i64),

    #[error("power series with zero constant term has no inverse")]
    NotInvertible,

    #[error("invalid parameter {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: i64,
        reason: &'static str,
    },

    #[error("{family} does not support rank {rank}")]
    UnsupportedRank { family: Family, rank: u32 },

    #[error("{0} has no reduction table (defining representation is the basis)")]
    NoReduction(Family),

    #[error("{group}: psi^{l} has a non-integral entry at row {row}, column {col}")]
    NonIntegral {
        group: GroupSpec,
        l: u32,
        row: usize,
        col: usize,
    },

    #[error("{group}: closed-form psi^{l} disagrees with the pullback computation")]
    PipelineMismatch { group: GroupSpec, l: u32 },

    #[error("eigenvector level {k} out of range for rank {n}")]
    LevelOutOfRange { n: u32, k: u32 },
}
