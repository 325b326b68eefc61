//! Bi-graded presentations with λ-commutation relations, normal-ordered
//! elements, and the graded star-product deformation.

mod checks;
mod combination;
mod element;
mod presentation;
mod quantize;

pub use checks::{
    check_associativity, check_involution, check_star_associativity, check_star_product,
};
pub use combination::{BasisKey, Combination};
pub use element::{normal_order, Element, Word};

pub use presentation::{DegreeVector, Generator, GradedPresentation};
pub use quantize::{ordering_exponent, product_phase, Quantization};

pub(crate) use combination::same_presentation;
pub(crate) use element::crossing_exponent;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("generator name `{0}` is not an identifier or is reserved (`L`, `i`)")]
    InvalidGeneratorName(String),
    #[error("generator `{0}` declared twice")]
    DuplicateGenerator(String),
    #[error("commutation matrix must be {0}x{0}")]
    CommutationShape(usize),
    #[error("commutation exponent of `{0}` with itself must be 0")]
    NonzeroDiagonal(String),
    #[error("commutation matrix is not antisymmetric at ({0}, {1})")]
    NotAntisymmetric(String, String),
    #[error("either every generator or none must have a star partner")]
    PartialInvolution,
    #[error("star partner of `{0}` is not an involutive pairing with negated degree")]
    BadInvolution(String),
    #[error("involution is not compatible with the relation between `{0}` and `{1}`")]
    InvolutionBreaksRelations(String, String),
    #[error("presentation `{0}` has no involution")]
    NoInvolution(String),
    #[error("generator index {0} out of range")]
    GeneratorIndex(usize),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("elements live over different presentations (`{0}` vs `{1}`)")]
    PresentationMismatch(String, String),
    #[error("element over `{0}` is not in the undeformed source algebra")]
    NotSource(String),
    #[error("element over `{0}` is not in the deformed algebra")]
    NotTarget(String),
}
