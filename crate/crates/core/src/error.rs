use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty list")]
    EmptyList,
    #[error("expected a positive value, got {0}")]
    NonPositive(i128),
    #[error("integer overflow")]
    Overflow,
    #[error("weights {0:?} are not ordered")]
    Unordered([u64; 4]),
    #[error("degree {degree} does not exceed the largest weight {largest}")]
    Degenerate { degree: u64, largest: u64 },
    #[error("weights {weights:?} with degree {degree} have non-positive index")]
    NonPositiveIndex { weights: [u64; 4], degree: u64 },
    #[error("index must be at least 1, got {0}")]
    InvalidIndex(u64),
    #[error("class number must be in 1..=6, got {0}")]
    InvalidClass(u8),
    #[error("representative {0} is not solid")]
    NotSolid(String),
    #[error("solid tuple {0} failed the full condition suite")]
    SolidNotValid(String),
    #[error("invalid series: {0}")]
    InvalidSeries(String),
}
