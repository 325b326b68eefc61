//! Differential forms over a graded presentation: the λ-graded-commutative
//! calculus with `dg_j g_i = λ^{c_ji} g_i dg_j` and
//! `dg_i ∧ dg_j = −λ^{c_ij} dg_j ∧ dg_i`, its exterior derivative, the
//! deformed wedge, and the symmetry acting on forms.

mod action;
mod checks;
mod form;

pub use action::{wedge_deformed, TwistedFormAction};
pub use checks::{check_calculus, check_form_action, sample_forms};
pub use form::{FormBasis, FormElement};

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::symmetry::SymmetryError;
use crate::twist::TwistError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CalculusError {
    #[error("a differential appears twice in a basis form")]
    RepeatedDifferential,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Symmetry(#[from] SymmetryError),
    #[error(transparent)]
    Twist(#[from] TwistError),
}
