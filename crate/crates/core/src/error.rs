use thiserror::Error;

use crate::ncpoly::NCPoly;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(crate::Field, crate::Field),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("rank {rank} too small, need at least {min}")]
    RankTooSmall { rank: usize, min: usize },
    #[error("variable index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("column {index} has a nonzero constant term")]
    NotInAugmentationIdeal { index: usize },
    #[error("columns are not antisymmetric at (i, j) = ({i}, {j})")]
    NotAntisymmetric { i: usize, j: usize },
    #[error("element has a nonzero linear part, expected an element of A^2")]
    NotInASquared,
    #[error("not a Chein automorphism: df/dx1 = {witness}")]
    NotChein { witness: NCPoly<u32> },
    #[error("endomorphism does not induce the identity on the linear part")]
    NotIA,
    #[error("degree bound {found} too small, need at least {min}")]
    DegreeTooSmall { found: usize, min: usize },
    #[error("endomorphism is the identity")]
    IdentityEndomorphism,
    #[error("({left}, {right}) is not a regular pair")]
    NotRegular { left: String, right: String },
}

impl Error {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::FieldMismatch(..) => "field_mismatch",
            Error::RankMismatch(..) => "rank_mismatch",
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::ZeroRank => "zero_rank",
            Error::RankTooSmall { .. } => "rank_too_small",
            Error::IndexOutOfRange { .. } => "index_out_of_range",
            Error::NotPrime(_) => "not_prime",
            Error::DivisionByZero => "division_by_zero",
            Error::NotInAugmentationIdeal { .. } => "not_in_augmentation_ideal",
            Error::NotAntisymmetric { .. } => "not_antisymmetric",
            Error::NotInASquared => "not_in_a_squared",
            Error::NotChein { .. } => "not_chein",
            Error::NotIA => "not_ia",
            Error::DegreeTooSmall { .. } => "degree_too_small",
            Error::IdentityEndomorphism => "identity_endomorphism",
            Error::NotRegular { .. } => "not_regular",
        }
    }
}
