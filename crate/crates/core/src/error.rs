use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("star powers start at exponent 1 (the weak unit is not a unit)")]
    ZeroStarPower,
    #[error("the classification needs nonzero parameters, got k = {k}, l = {l}")]
    DegenerateParameter { k: Scalar, l: Scalar },
    #[error("linear automorphism needs ad - bc = 1, got {0}")]
    DeterminantNotOne(Scalar),
    #[error("{0} must be a polynomial in x alone")]
    NotXOnly(&'static str),
    #[error("cannot compose: inner target l = {inner_target} but outer source k = {outer_source}")]
    ParameterMismatch {
        inner_target: Scalar,
        outer_source: Scalar,
    },
    #[error("morphism is not of the form x -> (l/k) x + c, y -> (k/l) y + p(x)")]
    NotClassified,
    #[error("series orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
