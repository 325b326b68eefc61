use std::sync::Arc;

use crate::algebra::{Element, GradedPresentation, Quantization};
use crate::symmetry::{GeneratorAction, OpExpr, OpWord};

use super::{HopfStructure, TwistError};

/// The twisted symmetry acting on `A_λ` by `T ▷ ul a = ul(t ▷ a)`.
#[derive(Clone, Debug)]
pub struct TwistedAction {
    quantization: Quantization,
    classical: GeneratorAction,
}

impl TwistedAction {
    pub fn new(classical: GeneratorAction) -> Self {
        let quantization = Quantization::new(classical.presentation());
        Self {
            quantization,
            classical,
        }
    }

    pub fn quantization(&self) -> &Quantization {
        &self.quantization
    }

    pub fn classical(&self) -> &GeneratorAction {
        &self.classical
    }

    /// `A_λ`.
    pub fn target(&self) -> &Arc<GradedPresentation> {
        self.quantization.target()
    }

    pub fn lift(&self, a: &Element) -> Result<Element, TwistError> {
        Ok(self.quantization.lift(a)?)
    }

    pub fn act(&self, w: &OpWord, a: &Element) -> Result<Element, TwistError> {
        let classical = self.quantization.unlift(a)?;
        self.lift(&self.classical.act(w, &classical)?)
    }

    pub fn act_expr(&self, e: &OpExpr, a: &Element) -> Result<Element, TwistError> {
        let classical = self.quantization.unlift(a)?;
        self.lift(&self.classical.act_expr(e, &classical)?)
    }

    /// `Σ (T₍₁₎ ▷ a)·(T₍₂₎ ▷ b)` in `A_λ`, with the coproduct of `hopf`.
    pub fn act_on_product(
        &self,
        hopf: &HopfStructure,
        t: &OpExpr,
        a: &Element,
        b: &Element,
    ) -> Result<Element, TwistError> {
        let delta = hopf.coproduct(t)?;
        let mut out = Element::zero(self.target());
        for (c, words) in delta.terms() {
            let left = self.act(&words[0], a)?;
            if left.is_zero() {
                continue;
            }
            let right = self.act(&words[1], b)?;
            out = &out + &left.multiply(&right)?.scale(c);
        }
        Ok(out)
    }
}
