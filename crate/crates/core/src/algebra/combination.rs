use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use super::{AlgebraError, DegreeVector, GradedPresentation};
use crate::scalars::Scalar;

/// A basis vector of a graded module over a presentation.
pub trait BasisKey: Clone + Ord + Hash + fmt::Debug + Send + Sync {
    /// Degrees of the factors, in the order they are multiplied in the basis
    /// product.
    fn factor_degrees(&self, p: &GradedPresentation) -> Vec<DegreeVector>;

    fn degree(&self, p: &GradedPresentation) -> DegreeVector {
        self.factor_degrees(p)
            .iter()
            .fold(DegreeVector::zero(), |acc, d| &acc + d)
    }

    /// Canonical product syntax, `1` for the unit.
    fn render(&self, p: &GradedPresentation) -> String;
}

/// Finite `Scalar` combination of basis keys over one presentation; zero
/// coefficients are never stored.
#[derive(Clone)]
pub struct Combination<K> {
    presentation: Arc<GradedPresentation>,
    terms: BTreeMap<K, Scalar>,
}

pub(crate) fn same_presentation(a: &Arc<GradedPresentation>, b: &Arc<GradedPresentation>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl<K: BasisKey> Combination<K> {
    pub fn zero(presentation: &Arc<GradedPresentation>) -> Self {
        Self {
            presentation: presentation.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn term(presentation: &Arc<GradedPresentation>, key: K, coeff: Scalar) -> Self {
        let mut out = Self::zero(presentation);
        out.add_term(key, coeff);
        out
    }

    pub fn from_terms(
        presentation: &Arc<GradedPresentation>,
        terms: impl IntoIterator<Item = (K, Scalar)>,
    ) -> Self {
        let mut out = Self::zero(presentation);
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn presentation(&self) -> &Arc<GradedPresentation> {
        &self.presentation
    }

    pub fn terms(&self) -> impl Iterator<Item = (&K, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, key: &K) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, key: K, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += &coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn ensure_same(&self, other: &Self) -> Result<(), AlgebraError> {
        if same_presentation(&self.presentation, &other.presentation) {
            Ok(())
        } else {
            Err(AlgebraError::PresentationMismatch(
                self.presentation.name().to_string(),
                other.presentation.name().to_string(),
            ))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.ensure_same(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::from_terms(
            &self.presentation,
            self.terms.iter().map(|(k, c)| (k.clone(), c * s)),
        )
    }

    /// Multiplies each basis term by a scalar depending on its degree.
    pub fn map_by_degree(&self, f: impl Fn(&DegreeVector) -> Scalar) -> Self {
        let p = &self.presentation;
        Self::from_terms(
            p,
            self.terms
                .iter()
                .map(|(k, c)| (k.clone(), c * &f(&k.degree(p)))),
        )
    }

    /// Same coefficients, conjugated.
    pub fn conj_coefficients(&self) -> Self {
        Self::from_terms(
            &self.presentation,
            self.terms.iter().map(|(k, c)| (k.clone(), c.conj())),
        )
    }

    /// Splits into homogeneous components.
    pub fn homogeneous_parts(&self) -> BTreeMap<DegreeVector, Self> {
        let mut parts: BTreeMap<DegreeVector, Self> = BTreeMap::new();
        for (k, c) in &self.terms {
            parts
                .entry(k.degree(&self.presentation))
                .or_insert_with(|| Self::zero(&self.presentation))
                .add_term(k.clone(), c.clone());
        }
        parts
    }

    /// The common degree of a nonzero homogeneous combination.
    pub fn degree_of(&self) -> Option<DegreeVector> {
        let mut degrees = self.terms.keys().map(|k| k.degree(&self.presentation));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree_of().is_some()
    }

    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl<K: BasisKey> PartialEq for Combination<K> {
    fn eq(&self, other: &Self) -> bool {
        same_presentation(&self.presentation, &other.presentation) && self.terms == other.terms
    }
}

impl<K: BasisKey> Eq for Combination<K> {}

impl<K: BasisKey> Add<&Combination<K>> for &Combination<K> {
    type Output = Combination<K>;

    /// Panics when the presentations differ; see [`Combination::try_add`].
    fn add(self, rhs: &Combination<K>) -> Combination<K> {
        self.try_add(rhs)
            .expect("adding combinations over different presentations")
    }
}

impl<K: BasisKey> Add for Combination<K> {
    type Output = Combination<K>;
    fn add(self, rhs: Combination<K>) -> Combination<K> {
        &self + &rhs
    }
}

impl<K: BasisKey> Neg for &Combination<K> {
    type Output = Combination<K>;
    fn neg(self) -> Combination<K> {
        self.scale(&-Scalar::one())
    }
}

impl<K: BasisKey> Neg for Combination<K> {
    type Output = Combination<K>;
    fn neg(self) -> Combination<K> {
        -&self
    }
}

impl<K: BasisKey> Sub<&Combination<K>> for &Combination<K> {
    type Output = Combination<K>;
    fn sub(self, rhs: &Combination<K>) -> Combination<K> {
        self + &(-rhs)
    }
}

impl<K: BasisKey> Sub for Combination<K> {
    type Output = Combination<K>;
    fn sub(self, rhs: Combination<K>) -> Combination<K> {
        &self - &rhs
    }
}

impl<K: BasisKey> fmt::Display for Combination<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (k, c)) in self.terms.iter().enumerate() {
            let key = k.render(&self.presentation);
            let mut term = if key == "1" {
                if c.num_terms() > 1 && idx > 0 {
                    format!("({c})")
                } else {
                    c.to_string()
                }
            } else if c.is_one() {
                key
            } else if (-c).is_one() {
                format!("-{key}")
            } else if c.num_terms() == 1 {
                format!("{c}*{key}")
            } else {
                format!("({c})*{key}")
            };
            if idx > 0 {
                term = match term.strip_prefix('-') {
                    Some(rest) => format!(" - {rest}"),
                    None => format!(" + {term}"),
                };
            }
            f.write_str(&term)?;
        }
        Ok(())
    }
}

impl<K: BasisKey> fmt::Debug for Combination<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.presentation.name(), self)
    }
}
