//! The classical symmetry: Cartan data, Chevalley generators acting as
//! degree-shifting derivations, and operator checks of the Lie and Serre
//! relations up to a degree cutoff.

mod action;
mod cartan;
mod relations;
mod symbols;

pub use action::{ActionRule, GeneratorAction, HModule};
pub use cartan::CartanData;
pub use relations::{check_lie_relations, check_serre, operator_counterexample, serre_expr};
pub use symbols::{OpExpr, OpWord, Sign, Symbol};

use thiserror::Error;

use crate::algebra::AlgebraError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymmetryError {
    #[error("invalid Cartan data: {0}")]
    InvalidCartan(String),
    #[error("Chevalley index {0} exceeds the rank")]
    IndexOutOfRange(usize),
    #[error("H{0} is not one of the two grading generators")]
    NotGrading(usize),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("{symbol} ▷ {generator} = {found} does not have degree {expected}")]
    DegreeShift {
        symbol: String,
        generator: String,
        expected: String,
        found: String,
    },
    #[error("{symbol} does not preserve the relation between `{left}` and `{right}`")]
    RelationViolation {
        symbol: String,
        left: String,
        right: String,
    },
    #[error("action and element live over different presentations")]
    PresentationMismatch,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[cfg(test)]
mod tests;
