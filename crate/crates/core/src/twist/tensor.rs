use std::fmt;
use std::sync::Arc;

use crate::algebra::{BasisKey, Combination, DegreeVector, Element, GradedPresentation, Word};
use crate::scalars::Scalar;
use crate::symmetry::{GeneratorAction, OpExpr, OpWord};

use super::TwistError;

/// Basis vector `w₁ ⊗ ⋯ ⊗ w_k` of a tensor power of a presentation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TensorKey(pub Vec<Word>);

impl TensorKey {
    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn slot_degrees(&self, p: &GradedPresentation) -> Vec<DegreeVector> {
        self.0.iter().map(|w| w.degree(p)).collect()
    }
}

impl BasisKey for TensorKey {
    fn factor_degrees(&self, p: &GradedPresentation) -> Vec<DegreeVector> {
        self.0.iter().flat_map(|w| w.factor_degrees(p)).collect()
    }

    fn render(&self, p: &GradedPresentation) -> String {
        let parts: Vec<String> = self.0.iter().map(|w| w.render(p)).collect();
        parts.join("⊗")
    }
}

pub type Tensor = Combination<TensorKey>;

/// `a₁ ⊗ ⋯ ⊗ a_k`; all factors must share one presentation.
pub fn tensor(factors: &[Element]) -> Result<Tensor, TwistError> {
    let p = factors
        .first()
        .ok_or(TwistError::EmptyTensor)?
        .presentation()
        .clone();
    let mut acc: Vec<(Vec<Word>, Scalar)> = vec![(Vec::new(), Scalar::one())];
    for f in factors {
        f.ensure_same(&factors[0])?;
        let mut next = Vec::new();
        for (words, c) in &acc {
            for (w, d) in f.terms() {
                let mut ws = words.clone();
                ws.push(w.clone());
                next.push((ws, c * d));
            }
        }
        acc = next;
    }
    Ok(Tensor::from_terms(
        &p,
        acc.into_iter().map(|(w, c)| (TensorKey(w), c)),
    ))
}

/// Factor `k` of a basis tensor, as an element.
fn slot_element(p: &Arc<GradedPresentation>, key: &TensorKey, k: usize) -> Element {
    Element::term(p, key.0[k].clone(), Scalar::one())
}

/// Linear combination of elementary tensors of symbol words, acting slot by
/// slot on tensor products of modules.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorOp {
    arity: usize,
    terms: Vec<(Scalar, Vec<OpWord>)>,
}

impl TensorOp {
    pub fn zero(arity: usize) -> Self {
        Self {
            arity,
            terms: Vec::new(),
        }
    }

    pub fn identity(arity: usize) -> Self {
        Self::elementary(Scalar::one(), vec![OpWord::identity(); arity])
    }

    pub fn elementary(c: Scalar, words: Vec<OpWord>) -> Self {
        Self {
            arity: words.len(),
            terms: vec![(c, words)],
        }
    }

    /// An operator on a single module, as a 1-fold tensor operator.
    pub fn from_expr(e: &OpExpr) -> Self {
        Self {
            arity: 1,
            terms: e
                .terms()
                .iter()
                .map(|(c, w)| (c.clone(), vec![w.clone()]))
                .collect(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &[(Scalar, Vec<OpWord>)] {
        &self.terms
    }

    fn check_arity(&self, other: usize) -> Result<(), TwistError> {
        if self.arity == other {
            Ok(())
        } else {
            Err(TwistError::ArityMismatch {
                expected: self.arity,
                found: other,
            })
        }
    }

    pub fn plus(&self, other: &Self) -> Result<Self, TwistError> {
        self.check_arity(other.arity)?;
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Ok(Self {
            arity: self.arity,
            terms,
        })
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self {
            arity: self.arity,
            terms: self.terms.iter().map(|(c, w)| (c * s, w.clone())).collect(),
        }
    }

    /// Slotwise operator product `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self, TwistError> {
        self.check_arity(other.arity)?;
        let mut terms = Vec::new();
        for (c1, w1) in &self.terms {
            for (c2, w2) in &other.terms {
                let words = w1.iter().zip(w2).map(|(a, b)| a.then(b)).collect();
                terms.push((c1 * c2, words));
            }
        }
        Ok(Self {
            arity: self.arity,
            terms,
        })
    }

    /// Reverses the order of the tensor factors.
    pub fn flip(&self) -> Self {
        Self {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(c, w)| (c.clone(), w.iter().rev().cloned().collect()))
                .collect(),
        }
    }

    /// Replaces slot `k` by a tensor operator built from its word, e.g.
    /// `Δ ⊗ id` for `k = 0`.
    pub fn expand_slot(
        &self,
        k: usize,
        f: impl Fn(&OpWord) -> Result<TensorOp, TwistError>,
    ) -> Result<Self, TwistError> {
        let mut out: Option<TensorOp> = None;
        for (c, words) in &self.terms {
            let inner = f(&words[k])?;
            let mut terms = Vec::new();
            for (d, replacement) in &inner.terms {
                let mut ws = words[..k].to_vec();
                ws.extend(replacement.iter().cloned());
                ws.extend(words[k + 1..].iter().cloned());
                terms.push((c * d, ws));
            }
            let piece = TensorOp {
                arity: self.arity + inner.arity - 1,
                terms,
            };
            out = Some(match out {
                None => piece,
                Some(acc) => acc.plus(&piece)?,
            });
        }
        Ok(out.unwrap_or_else(|| TensorOp::zero(self.arity)))
    }

    /// Contracts slot `k` with a scalar-valued map such as the counit.
    pub fn contract_slot(&self, k: usize, f: impl Fn(&OpWord) -> Scalar) -> Self {
        Self {
            arity: self.arity - 1,
            terms: self
                .terms
                .iter()
                .map(|(c, words)| {
                    let mut ws = words.clone();
                    let w = ws.remove(k);
                    (c * &f(&w), ws)
                })
                .collect(),
        }
    }

    /// Multiplies the slots into a single operator after mapping each slot
    /// word to an expression, e.g. `m ∘ (S ⊗ id)`.
    pub fn collapse(
        &self,
        f: impl Fn(usize, &OpWord) -> Result<OpExpr, TwistError>,
    ) -> Result<OpExpr, TwistError> {
        let mut total = OpExpr::zero();
        for (c, words) in &self.terms {
            let mut product = OpExpr::identity();
            for (k, w) in words.iter().enumerate() {
                product = product.compose(&f(k, w)?);
            }
            total = total.plus(&product.scale(c));
        }
        Ok(total)
    }

    /// Applies the operator to a tensor, acting on slot `k` with `act`.
    pub fn apply_with(
        &self,
        t: &Tensor,
        act: impl Fn(&OpWord, &Element) -> Result<Element, TwistError>,
    ) -> Result<Tensor, TwistError> {
        let p = t.presentation();
        let mut out = Tensor::zero(p);
        for (key, coeff) in t.terms() {
            if key.arity() != self.arity {
                return Err(TwistError::ArityMismatch {
                    expected: self.arity,
                    found: key.arity(),
                });
            }
            for (c, words) in &self.terms {
                let factors = words
                    .iter()
                    .enumerate()
                    .map(|(k, w)| act(w, &slot_element(p, key, k)))
                    .collect::<Result<Vec<_>, _>>()?;
                if factors.iter().any(Element::is_zero) {
                    continue;
                }
                out = &out + &tensor(&factors)?.scale(&(coeff * c));
            }
        }
        Ok(out)
    }

    /// Applies the operator through the classical action in every slot.
    pub fn act(&self, action: &GeneratorAction, t: &Tensor) -> Result<Tensor, TwistError> {
        self.apply_with(t, |w, a| Ok(action.act(w, a)?))
    }
}

impl fmt::Display for TensorOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (c, words)) in self.terms.iter().enumerate() {
            let parts: Vec<String> = words.iter().map(|w| w.to_string()).collect();
            let body = parts.join(" ⊗ ");
            let body = if c.is_one() {
                body
            } else if (-c).is_one() {
                format!("-{body}")
            } else {
                format!("({c}) {body}")
            };
            if idx == 0 {
                write!(f, "{body}")?;
            } else if let Some(rest) = body.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}
