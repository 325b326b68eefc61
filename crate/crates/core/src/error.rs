use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::calculus::CalculusError;
use crate::cli::CliError;
use crate::spectral::SpectralError;
use crate::symmetry::SymmetryError;
use crate::twist::TwistError;

/// Any error raised by the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Symmetry(#[from] SymmetryError),
    #[error(transparent)]
    Twist(#[from] TwistError),
    #[error(transparent)]
    Calculus(#[from] CalculusError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Cli(#[from] CliError),
}
