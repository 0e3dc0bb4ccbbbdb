use thiserror::Error;

use crate::composition::Composition;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A factor that must be nonzero vanished at the chosen value of alpha.
    #[error("alpha is singular: {0} vanishes")]
    AlphaSingular(String),

    /// An exact polynomial division left a remainder.
    #[error("polynomial is not divisible by z_{i} - z_{p}", i = .0 + 1, p = .1 + 1)]
    NonDivisible(usize, usize),

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("polynomial is zero")]
    ZeroPolynomial,

    #[error("leading coefficient of the symmetrization of E_{0} is zero")]
    ZeroLeadingCoefficient(Composition),

    /// Triangular elimination terminated with a nonzero remainder.
    #[error("polynomial is not in the span of the basis ({0} residual terms)")]
    NotInSpan(usize),

    #[error("compositions have different weights ({0} and {1})")]
    WeightMismatch(u32, u32),

    #[error("dimension mismatch: expected {expected} variables, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}
