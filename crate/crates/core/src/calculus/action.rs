use crate::algebra::{same_presentation, DegreeVector, Quantization, Word};
use crate::scalars::Scalar;
use crate::symmetry::{GeneratorAction, HModule, Sign, SymmetryError};
use crate::twist::HopfStructure;

use super::{CalculusError, FormBasis, FormElement};

/// `ul ω ∧ ul ρ = λ^{n₁^ω n₂^ρ} ul(ω ∧ ρ)`, decomposing into homogeneous
/// parts; the result lives in `Ω(A_λ)`.
pub fn wedge_deformed(
    q: &Quantization,
    w: &FormElement,
    r: &FormElement,
) -> Result<FormElement, CalculusError> {
    Ok(q.deformed_product(w, r, FormElement::wedge)?)
}

impl HModule for FormElement {
    fn zero_like(&self) -> Self {
        FormElement::zero(self.presentation())
    }

    fn plus(&self, other: &Self) -> Self {
        self + other
    }

    fn scaled(&self, s: &Scalar) -> Self {
        self.scale(s)
    }

    fn by_degree(&self, f: &dyn Fn(&DegreeVector) -> Scalar) -> Self {
        self.map_by_degree(f)
    }

    /// Derivation on letters with `x ▷ dg = d(x ▷ g)`.
    fn apply_x(
        &self,
        action: &GeneratorAction,
        i: usize,
        sign: Sign,
    ) -> Result<Self, SymmetryError> {
        let p = self.presentation();
        if !same_presentation(p, action.presentation()) {
            return Err(SymmetryError::PresentationMismatch);
        }
        let n = p.len();
        let mut out = FormElement::zero(p);
        let function = |seq: &[usize]| FormBasis::function(Word::from_sorted(n, seq));
        for (key, c) in self.terms() {
            let seq = key.word().sequence();
            let diffs = key.diffs();
            let letters = seq.len() + diffs.len();
            for t in 0..letters {
                let (g, is_diff) = if t < seq.len() {
                    (seq[t], false)
                } else {
                    (diffs[t - seq.len()], true)
                };
                let image = action.image(i, sign, g);
                if image.is_zero() {
                    continue;
                }
                let mut image = FormElement::from_element(image);
                if is_diff {
                    image = image.exterior_d();
                }
                let (prefix, suffix) = if is_diff {
                    let k = t - seq.len();
                    let pre = FormBasis::new(Word::from_sorted(n, &seq), diffs[..k].to_vec())
                        .expect("distinct");
                    let post =
                        FormBasis::new(Word::unit(n), diffs[k + 1..].to_vec()).expect("distinct");
                    (pre, post)
                } else {
                    let post = FormBasis::new(Word::from_sorted(n, &seq[t + 1..]), diffs.to_vec())
                        .expect("distinct");
                    (function(&seq[..t]), post)
                };
                let piece = FormElement::term(p, prefix, c.clone())
                    .wedge(&image)
                    .and_then(|f| f.wedge(&FormElement::term(p, suffix, Scalar::one())))?;
                out = &out + &piece;
            }
        }
        Ok(out)
    }

    fn is_zero_vector(&self) -> bool {
        self.is_zero()
    }

    fn render(&self) -> String {
        self.to_string()
    }
}

/// The twisted symmetry on `Ω(A_λ)`: `T ▷ ul ω = ul(t ▷ ω)`.
#[derive(Clone, Debug)]
pub struct TwistedFormAction {
    quantization: Quantization,
    classical: GeneratorAction,
}

impl TwistedFormAction {
    pub fn new(classical: GeneratorAction) -> Self {
        Self {
            quantization: Quantization::new(classical.presentation()),
            classical,
        }
    }

    pub fn quantization(&self) -> &Quantization {
        &self.quantization
    }

    pub fn classical(&self) -> &GeneratorAction {
        &self.classical
    }

    pub fn lift(&self, w: &FormElement) -> Result<FormElement, CalculusError> {
        Ok(self.quantization.lift(w)?)
    }

    pub fn act(
        &self,
        t: &crate::symmetry::OpExpr,
        w: &FormElement,
    ) -> Result<FormElement, CalculusError> {
        let classical = self.quantization.unlift(w)?;
        self.lift(&self.classical.act_expr(t, &classical)?)
    }

    /// `Σ (T₍₁₎ ▷ ω) ∧ (T₍₂₎ ▷ ρ)` for `ω, ρ ∈ Ω(A_λ)`.
    pub fn act_on_wedge(
        &self,
        hopf: &HopfStructure,
        t: &crate::symmetry::OpExpr,
        w: &FormElement,
        r: &FormElement,
    ) -> Result<FormElement, CalculusError> {
        let delta = hopf.coproduct(t)?;
        let mut out = FormElement::zero(self.quantization.target());
        for (c, words) in delta.terms() {
            let left = self.act(&crate::symmetry::OpExpr::word(words[0].clone()), w)?;
            if left.is_zero() {
                continue;
            }
            let right = self.act(&crate::symmetry::OpExpr::word(words[1].clone()), r)?;
            out = &out + &left.wedge(&right)?.scale(c);
        }
        Ok(out)
    }
}
