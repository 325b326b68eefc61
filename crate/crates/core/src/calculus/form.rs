use std::sync::Arc;

use num::BigInt;

use crate::algebra::{
    crossing_exponent, AlgebraError, BasisKey, Combination, DegreeVector, Element,
    GradedPresentation, Word,
};
use crate::scalars::Scalar;

use super::CalculusError;

/// Basis form `w · dg_{i₁} ∧ ⋯ ∧ dg_{i_k}` with `w` a normal-ordered word
/// and `i₁ < ⋯ < i_k`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FormBasis {
    word: Word,
    diffs: Vec<usize>,
}

impl FormBasis {
    pub fn new(word: Word, mut diffs: Vec<usize>) -> Result<Self, CalculusError> {
        diffs.sort_unstable();
        if diffs.windows(2).any(|w| w[0] == w[1]) {
            return Err(CalculusError::RepeatedDifferential);
        }
        Ok(Self { word, diffs })
    }

    pub fn function(word: Word) -> Self {
        Self {
            word,
            diffs: Vec::new(),
        }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn diffs(&self) -> &[usize] {
        &self.diffs
    }

    pub fn form_degree(&self) -> usize {
        self.diffs.len()
    }
}

impl BasisKey for FormBasis {
    /// Word letters first, then the differentials, each `dg` of degree
    /// `deg g`.
    fn factor_degrees(&self, p: &GradedPresentation) -> Vec<DegreeVector> {
        let mut out = self.word.factor_degrees(p);
        out.extend(self.diffs.iter().map(|&g| p.degree(g).clone()));
        out
    }

    fn render(&self, p: &GradedPresentation) -> String {
        let d: Vec<String> = self
            .diffs
            .iter()
            .map(|&g| format!("d{}", p.generators()[g].name))
            .collect();
        match (self.word.is_empty(), d.is_empty()) {
            (_, true) => self.word.render(p),
            (true, false) => d.join("^"),
            (false, false) => format!("{}*{}", self.word.render(p), d.join("^")),
        }
    }
}

/// Differential form over a presentation.
pub type FormElement = Combination<FormBasis>;

/// `(w₁ dD₁)(w₂ dD₂)` in normal order, as a signed λ-power, or `None` if a
/// differential repeats. Moving `g_b` left past `dg_a` gives `λ^{c_ab}`;
/// exchanging `dg_a dg_b` gives `−λ^{c_ab}`.
fn basis_product(
    p: &GradedPresentation,
    x: &FormBasis,
    y: &FormBasis,
) -> Option<(FormBasis, BigInt, bool)> {
    let mut k = crossing_exponent(p, &x.word, &y.word);
    for &a in &x.diffs {
        for (b, &e) in y.word.exponents().iter().enumerate() {
            if e > 0 {
                k += p.commutation(a, b) * e;
            }
        }
    }
    let mut negative = false;
    for &a in &x.diffs {
        for &b in &y.diffs {
            if a == b {
                return None;
            }
            if a > b {
                k += p.commutation(a, b);
                negative = !negative;
            }
        }
    }
    let mut diffs = x.diffs.clone();
    diffs.extend(&y.diffs);
    diffs.sort_unstable();
    Some((
        FormBasis {
            word: x.word.concat(&y.word),
            diffs,
        },
        k,
        negative,
    ))
}

impl Combination<FormBasis> {
    /// A function (0-form).
    pub fn from_element(a: &Element) -> Self {
        Self::from_terms(
            a.presentation(),
            a.terms()
                .map(|(w, c)| (FormBasis::function(w.clone()), c.clone())),
        )
    }

    /// `dg`.
    pub fn differential(p: &Arc<GradedPresentation>, g: usize) -> Self {
        Self::term(
            p,
            FormBasis {
                word: Word::unit(p.len()),
                diffs: vec![g],
            },
            Scalar::one(),
        )
    }

    pub fn wedge(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.ensure_same(other)?;
        let p = self.presentation();
        let mut out = Self::zero(p);
        for (x, c1) in self.terms() {
            for (y, c2) in other.terms() {
                if let Some((key, k, negative)) = basis_product(p, x, y) {
                    let c = (c1 * c2).shift(&k);
                    out.add_term(key, if negative { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    /// The exterior derivative: `d(w·dD) = dw ∧ dD`, with `dw` from the
    /// Leibniz rule along the letters of `w`.
    pub fn exterior_d(&self) -> Self {
        let p = self.presentation();
        let n = p.len();
        let mut out = Self::zero(p);
        for (key, c) in self.terms() {
            let seq = key.word.sequence();
            let tail = Self::term(
                p,
                FormBasis {
                    word: Word::unit(n),
                    diffs: key.diffs.clone(),
                },
                Scalar::one(),
            );
            for t in 0..seq.len() {
                let prefix = Self::term(
                    p,
                    FormBasis::function(Word::from_sorted(n, &seq[..t])),
                    c.clone(),
                );
                let suffix = Self::term(
                    p,
                    FormBasis::function(Word::from_sorted(n, &seq[t + 1..])),
                    Scalar::one(),
                );
                let piece = prefix
                    .wedge(&Self::differential(p, seq[t]))
                    .and_then(|f| f.wedge(&suffix))
                    .and_then(|f| f.wedge(&tail))
                    .expect("same presentation");
                out = &out + &piece;
            }
        }
        out
    }

    /// The common form degree of a nonzero form with all terms of one degree.
    pub fn form_degree(&self) -> Option<usize> {
        let mut degrees = self.terms().map(|(k, _)| k.form_degree());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Splits by form degree.
    pub fn form_degree_parts(&self) -> Vec<(usize, Self)> {
        let mut parts: std::collections::BTreeMap<usize, Self> = Default::default();
        for (k, c) in self.terms() {
            parts
                .entry(k.form_degree())
                .or_insert_with(|| Self::zero(self.presentation()))
                .add_term(k.clone(), c.clone());
        }
        parts.into_iter().collect()
    }
}
