//! Exact kernel for Cartan-twisted isospectral deformations.
//!
//! A bi-graded algebra `A` acted on by two commuting `U(1)` generators is
//! deformed into `A_λ` by the graded star product `a * b = λ^{n₁ᵃn₂ᵇ} ab`.
//! The Lie-algebra symmetry of `A` becomes a Hopf algebra twisted by
//! `Ψ = λ^{−H₁⊗H₂}`, which still acts on `A_λ`, on its forms, and
//! isometrically on a truncated noncommutative-torus spectral triple.
//!
//! Every algebraic identity is checked exactly over Laurent polynomials in λ
//! with Gaussian-rational coefficients; only [`spectral`] uses floating point.

pub mod algebra;
pub mod calculus;
pub mod check;
pub mod cli;
pub mod fixtures;
pub mod sampling;
pub mod scalars;
pub mod spectral;
pub mod symmetry;
pub mod twist;

mod error;

pub use error::Error;
