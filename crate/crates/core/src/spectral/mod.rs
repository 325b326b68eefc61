//! Truncated spectral triples of commutative bi-graded algebras and the
//! numeric evidence that the deformation is isospectral: bounded
//! commutators, unchanged Dirac spectrum, and equivariance of the deformed
//! representation.
//!
//! Everything here is floating point on a finite mode window, so passing
//! checks are evidence rather than proof.

mod checks;
mod model;
mod operator;

pub use checks::{
    check_boundedness_and_isospectrality, check_crossproduct_equivariance, check_isometry,
    check_relations, check_representation, crossproduct_residual, dirac_spectrum,
    dirac_spectrum_closed_form, NormRecord, SpectralSummary, SpectrumSummary, TOLERANCE,
};
pub use model::{SpectralModel, C64};
pub use operator::WindowedOperator;

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::symmetry::SymmetryError;
use crate::twist::TwistError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectralError {
    #[error("`{0}` is not commutative; the mode-shift model needs a commutative presentation")]
    NotCommutative(String),
    #[error("cutoff must be at least 1, got {0}")]
    Cutoff(i64),
    #[error("θ = {0} needs a denominator of at most 2^20")]
    Theta(String),
    #[error("element shifts modes by {needed}, more than the cutoff {cutoff}")]
    Budget { needed: String, cutoff: i64 },
    #[error("`{0}` does not act diagonally on modes")]
    Unsupported(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Symmetry(#[from] SymmetryError),
    #[error(transparent)]
    Twist(#[from] TwistError),
}

#[cfg(test)]
mod tests;
