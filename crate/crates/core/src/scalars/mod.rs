//! Exact coefficients: Laurent polynomials in λ over the Gaussian rationals,
//! and integer polynomial exponent forms in symbolic degrees.

mod form;
mod scalar;

pub use form::{form_identity_check, DegreeForm, Monomial};
pub use scalar::{fmt_gaussian, gaussian, gaussian_from_rational, Gaussian, Scalar};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("degree forms are over different variable sets: {left:?} vs {right:?}")]
    VariableMismatch {
        left: Vec<String>,
        right: Vec<String>,
    },
    #[error("unknown degree variable `{0}`")]
    UnknownVariable(String),
    #[error("degree variable `{0}` has no value")]
    UnboundVariable(String),
}
