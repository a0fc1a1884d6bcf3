use thiserror::Error;

use crate::interval::Exponent;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("base must be at least 2, got {0}")]
    InvalidBase(u64),
    #[error("digit length is undefined for non-positive integers")]
    NonPositive,
    #[error("interval length must be at least 1")]
    EmptyInterval,
    #[error("interval power must be at least 1")]
    ZeroPower,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("base mismatch: {0} vs {1}")]
    BaseMismatch(u32, u32),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("bound {bound} must exceed every exponent (max {max})")]
    BoundTooSmall { bound: Exponent, max: Exponent },
}

pub type Result<T> = std::result::Result<T, Error>;
