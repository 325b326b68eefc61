use std::sync::Arc;

use crate::algebra::{same_presentation, DegreeVector, Element, GradedPresentation, Word};
use crate::scalars::Scalar;

use super::{CartanData, OpExpr, OpWord, Sign, Symbol, SymmetryError};

/// A module on which Chevalley generators can act.
pub trait HModule: Clone + Send + Sync {
    fn zero_like(&self) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn scaled(&self, s: &Scalar) -> Self;
    fn by_degree(&self, f: &dyn Fn(&DegreeVector) -> Scalar) -> Self;
    /// The derivation `xᵢ^±`.
    fn apply_x(
        &self,
        action: &GeneratorAction,
        i: usize,
        sign: Sign,
    ) -> Result<Self, SymmetryError>;
    fn is_zero_vector(&self) -> bool;
    fn render(&self) -> String;
}

/// Chevalley generators acting on a presentation as degree-shifting
/// derivations determined by their values on generators.
#[derive(Clone, Debug)]
pub struct GeneratorAction {
    cartan: CartanData,
    presentation: Arc<GradedPresentation>,
    // images[i][sign][g]
    images: Vec<[Vec<Element>; 2]>,
}

fn sign_index(s: Sign) -> usize {
    match s {
        Sign::Plus => 0,
        Sign::Minus => 1,
    }
}

/// One rule `xᵢ^± ▷ g = image`.
#[derive(Clone, Debug)]
pub struct ActionRule {
    pub index: usize,
    pub sign: Sign,
    pub generator: usize,
    pub image: Element,
}

impl GeneratorAction {
    /// Builds the action; images of repeated rules add up. Fails if an image
    /// does not shift the degree by `±(αᵢ, βᵢ)` or the derivation does not
    /// preserve the λ-commutation relations.
    pub fn new(
        cartan: CartanData,
        presentation: &Arc<GradedPresentation>,
        rules: impl IntoIterator<Item = ActionRule>,
    ) -> Result<Self, SymmetryError> {
        let n = presentation.len();
        let zero = Element::zero(presentation);
        let mut images: Vec<[Vec<Element>; 2]> = (0..cartan.rank())
            .map(|_| [vec![zero.clone(); n], vec![zero.clone(); n]])
            .collect();
        for rule in rules {
            if rule.index >= cartan.rank() {
                return Err(SymmetryError::IndexOutOfRange(rule.index + 1));
            }
            if rule.generator >= n {
                return Err(SymmetryError::Algebra(
                    crate::algebra::AlgebraError::GeneratorIndex(rule.generator),
                ));
            }
            if !same_presentation(rule.image.presentation(), presentation) {
                return Err(SymmetryError::PresentationMismatch);
            }
            let slot = &mut images[rule.index][sign_index(rule.sign)][rule.generator];
            *slot = &*slot + &rule.image;
        }
        let action = Self {
            cartan,
            presentation: presentation.clone(),
            images,
        };
        action.check_degree_shifts()?;
        action.check_relations()?;
        Ok(action)
    }

    fn check_degree_shifts(&self) -> Result<(), SymmetryError> {
        let p = &self.presentation;
        for i in 0..self.cartan.rank() {
            let shift = self.cartan.shift(i);
            for sign in Sign::both() {
                let delta = if sign == Sign::Plus {
                    shift.clone()
                } else {
                    -&shift
                };
                for g in 0..p.len() {
                    let image = self.image(i, sign, g);
                    if image.is_zero() {
                        continue;
                    }
                    let expected = p.degree(g) + &delta;
                    if image.degree_of() != Some(expected.clone()) {
                        return Err(SymmetryError::DegreeShift {
                            symbol: Symbol::X(i, sign).to_string(),
                            generator: p.generators()[g].name.clone(),
                            expected: expected.to_string(),
                            found: image.to_string(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    // x(gₐg_b − λ^{c_ab} g_bgₐ) must vanish for the derivation to be well defined
    fn check_relations(&self) -> Result<(), SymmetryError> {
        let p = &self.presentation;
        if p.is_commutative() {
            return Ok(());
        }
        for i in 0..self.cartan.rank() {
            for sign in Sign::both() {
                for a in 0..p.len() {
                    for b in 0..a {
                        let (ga, gb) = (Element::generator(p, a), Element::generator(p, b));
                        let (xa, xb) = (self.image(i, sign, a), self.image(i, sign, b));
                        let d_ab = &(xa * &gb) + &(&ga * xb);
                        let d_ba = &(xb * &ga) + &(&gb * xa);
                        let c = Scalar::lambda_pow(p.commutation(a, b).clone());
                        if !(&d_ab - &d_ba.scale(&c)).is_zero() {
                            return Err(SymmetryError::RelationViolation {
                                symbol: Symbol::X(i, sign).to_string(),
                                left: p.generators()[a].name.clone(),
                                right: p.generators()[b].name.clone(),
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn cartan(&self) -> &CartanData {
        &self.cartan
    }

    pub fn presentation(&self) -> &Arc<GradedPresentation> {
        &self.presentation
    }

    /// `xᵢ^± ▷ g`.
    pub fn image(&self, i: usize, sign: Sign, g: usize) -> &Element {
        &self.images[i][sign_index(sign)][g]
    }

    pub fn has_x(&self) -> bool {
        self.images.iter().flatten().flatten().any(|e| !e.is_zero())
    }

    fn check_index(&self, i: usize) -> Result<(), SymmetryError> {
        if i < self.cartan.rank() {
            Ok(())
        } else {
            Err(SymmetryError::IndexOutOfRange(i + 1))
        }
    }

    fn grading_slot(&self, h: usize) -> Result<usize, SymmetryError> {
        self.check_index(h)?;
        self.cartan
            .slot_of(h)
            .ok_or(SymmetryError::NotGrading(h + 1))
    }

    pub fn act_symbol<M: HModule>(&self, s: &Symbol, a: &M) -> Result<M, SymmetryError> {
        match s {
            Symbol::H(i) => {
                self.check_index(*i)?;
                match self.cartan.slot_of(*i) {
                    Some(slot) => {
                        Ok(a.by_degree(&|d| Scalar::from_integer(d.component(slot).clone())))
                    }
                    None => {
                        // hᵢ = [xᵢ⁺, xᵢ⁻] for Cartan generators outside the grading
                        let plus =
                            a.apply_x(self, *i, Sign::Minus)?
                                .apply_x(self, *i, Sign::Plus)?;
                        let minus =
                            a.apply_x(self, *i, Sign::Plus)?
                                .apply_x(self, *i, Sign::Minus)?;
                        Ok(plus.plus(&minus.scaled(&-Scalar::one())))
                    }
                }
            }
            Symbol::X(i, sign) => {
                self.check_index(*i)?;
                a.apply_x(self, *i, *sign)
            }
            Symbol::Exp { h, k } => {
                let slot = self.grading_slot(*h)?;
                Ok(a.by_degree(&|d| Scalar::lambda_pow(k * d.component(slot))))
            }
            Symbol::QuadExp(k) => Ok(a.by_degree(&|d| Scalar::lambda_pow(k * &d.n1 * &d.n2))),
        }
    }

    /// Classical action of a symbol word; the rightmost symbol acts first.
    pub fn act<M: HModule>(&self, w: &OpWord, a: &M) -> Result<M, SymmetryError> {
        let mut out = a.clone();
        for s in w.symbols().iter().rev() {
            if out.is_zero_vector() {
                break;
            }
            out = self.act_symbol(s, &out)?;
        }
        Ok(out)
    }

    pub fn act_expr<M: HModule>(&self, e: &OpExpr, a: &M) -> Result<M, SymmetryError> {
        let mut out = a.zero_like();
        for (c, w) in e.terms() {
            out = out.plus(&self.act(w, a)?.scaled(c));
        }
        Ok(out)
    }
}

impl HModule for Element {
    fn zero_like(&self) -> Self {
        Element::zero(self.presentation())
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

    /// Leibniz rule along the normal-ordered word.
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
        let mut out = Element::zero(p);
        for (w, c) in self.terms() {
            let seq = w.sequence();
            for t in 0..seq.len() {
                let image = action.image(i, sign, seq[t]);
                if image.is_zero() {
                    continue;
                }
                let prefix = Element::term(p, Word::from_sorted(n, &seq[..t]), c.clone());
                let suffix = Element::term(p, Word::from_sorted(n, &seq[t + 1..]), Scalar::one());
                out = &out + &(&(&prefix * image) * &suffix);
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
