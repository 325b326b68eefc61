//! The Cartan twist `Ψ = λ^{−H₁⊗H₂}` and the Hopf structure it produces:
//! twisted coproduct and antipode, the element `U`, the R-matrix, the
//! twisted action on `A_λ`, and the checks of the module-algebra and star
//! compatibility properties.

mod action;
mod checks;
mod hopf;
mod psi;
mod tensor;

pub use action::TwistedAction;
pub use checks::{
    check_hopf_axioms, check_module_algebra, check_r_matrix, check_star_compat, check_twist,
    generator_symbols, printed_r_exponent, twist_product,
};
pub use hopf::{Coproduct, HopfStructure};
pub use psi::{Side, Twist, PAIR_VARS, TRIPLE_VARS};
pub use tensor::{tensor, Tensor, TensorKey, TensorOp};

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::scalars::ScalarError;
use crate::symmetry::SymmetryError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TwistError {
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("tensor operator of arity {expected} applied to arity {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("empty tensor product")]
    EmptyTensor,
    #[error("twist exponent uses `{0}`; only p1, p2, q1, q2 are allowed")]
    TwistVariable(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Symmetry(#[from] SymmetryError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}
