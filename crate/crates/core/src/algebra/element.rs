use std::cmp::Ordering;
use std::ops::Mul;
use std::sync::Arc;

use num::{BigInt, Zero};

use super::{AlgebraError, BasisKey, Combination, DegreeVector, GradedPresentation};
use crate::scalars::Scalar;

/// Normal-ordered word, stored as the multiplicity of each generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn unit(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn generator(n: usize, g: usize) -> Self {
        let mut e = vec![0; n];
        e[g] = 1;
        Self(e)
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Self(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Generator indices in nondecreasing order.
    pub fn sequence(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(g, &e)| std::iter::repeat_n(g, e as usize))
            .collect()
    }

    pub fn from_sorted(n: usize, seq: &[usize]) -> Self {
        let mut e = vec![0; n];
        for &g in seq {
            e[g] += 1;
        }
        Self(e)
    }

    pub(crate) fn concat(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Word {
    // shorter words first, then the earlier generators first
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl BasisKey for Word {
    fn factor_degrees(&self, p: &GradedPresentation) -> Vec<DegreeVector> {
        self.sequence()
            .into_iter()
            .map(|g| p.degree(g).clone())
            .collect()
    }

    fn degree(&self, p: &GradedPresentation) -> DegreeVector {
        let mut d = DegreeVector::zero();
        for (g, &e) in self.0.iter().enumerate() {
            if e > 0 {
                let gd = p.degree(g);
                d.n1 += &gd.n1 * e;
                d.n2 += &gd.n2 * e;
            }
        }
        d
    }

    fn render(&self, p: &GradedPresentation) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(g, &e)| {
                let name = &p.generators()[g].name;
                if e == 1 {
                    name.clone()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Element of a presented algebra in the normal-ordered word basis.
pub type Element = Combination<Word>;

/// λ-exponent picked up when the normal-ordered `left` is moved past the
/// normal-ordered `right`: every pair `x ∈ left, y ∈ right` with `x > y` is
/// transposed once.
pub(crate) fn crossing_exponent(p: &GradedPresentation, left: &Word, right: &Word) -> BigInt {
    let mut k = BigInt::zero();
    for (x, &ex) in left.0.iter().enumerate() {
        if ex == 0 {
            continue;
        }
        for (y, &ey) in right.0.iter().enumerate().take(x) {
            if ey > 0 {
                k += p.commutation(x, y) * (ex * ey);
            }
        }
    }
    k
}

/// Rewrites an arbitrary generator sequence into its normal-ordered word,
/// accumulating `λ^{c_{ij}}` for each transposed inverted pair.
pub fn normal_order(p: &Arc<GradedPresentation>, word: &[usize]) -> Result<Element, AlgebraError> {
    if let Some(&bad) = word.iter().find(|&&g| g >= p.len()) {
        return Err(AlgebraError::GeneratorIndex(bad));
    }
    let mut k = BigInt::zero();
    for (s, &x) in word.iter().enumerate() {
        for &y in &word[s + 1..] {
            if x > y {
                k += p.commutation(x, y);
            }
        }
    }
    let mut sorted = word.to_vec();
    sorted.sort_unstable();
    Ok(Element::term(
        p,
        Word::from_sorted(p.len(), &sorted),
        Scalar::lambda_pow(k),
    ))
}

impl Combination<Word> {
    pub fn unit(p: &Arc<GradedPresentation>) -> Self {
        Self::term(p, Word::unit(p.len()), Scalar::one())
    }

    pub fn scalar(p: &Arc<GradedPresentation>, s: Scalar) -> Self {
        Self::term(p, Word::unit(p.len()), s)
    }

    pub fn generator(p: &Arc<GradedPresentation>, g: usize) -> Self {
        Self::term(p, Word::generator(p.len(), g), Scalar::one())
    }

    pub fn generator_named(p: &Arc<GradedPresentation>, name: &str) -> Result<Self, AlgebraError> {
        let g = p
            .generator_index(name)
            .ok_or_else(|| AlgebraError::UnknownGenerator(name.to_string()))?;
        Ok(Self::generator(p, g))
    }

    /// Bilinear extension of concatenation followed by normal ordering.
    pub fn multiply(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.ensure_same(other)?;
        let p = self.presentation();
        let mut out = Self::zero(p);
        for (w1, c1) in self.terms() {
            for (w2, c2) in other.terms() {
                let k = crossing_exponent(p, w1, w2);
                out.add_term(w1.concat(w2), (c1 * c2).shift(&k));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::unit(self.presentation());
        for _ in 0..e {
            out = out.multiply(self).expect("same presentation");
        }
        out
    }

    /// Antilinear anti-automorphism induced by the generator pairing:
    /// coefficients conjugated, words reversed with every generator starred.
    pub fn involution(&self) -> Result<Self, AlgebraError> {
        let p = self.presentation();
        if !p.has_involution() {
            return Err(AlgebraError::NoInvolution(p.name().to_string()));
        }
        let mut out = Self::zero(p);
        for (w, c) in self.terms() {
            let starred: Vec<usize> = w
                .sequence()
                .into_iter()
                .rev()
                .map(|g| p.star_of(g).expect("checked"))
                .collect();
            let ordered = normal_order(p, &starred)?;
            out = &out + &ordered.scale(&c.conj());
        }
        Ok(out)
    }
}

impl Mul<&Element> for &Element {
    type Output = Element;

    /// Panics on presentation mismatch; see [`Element::multiply`].
    fn mul(self, rhs: &Element) -> Element {
        self.multiply(rhs)
            .expect("multiplying elements of different presentations")
    }
}
