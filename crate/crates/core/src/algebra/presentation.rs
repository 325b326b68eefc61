use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num::{BigInt, Zero};

use super::AlgebraError;

/// Bidegree `(n₁, n₂)`: the eigenvalues of `h₁, h₂` on a homogeneous element.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreeVector {
    pub n1: BigInt,
    pub n2: BigInt,
}

impl DegreeVector {
    pub fn new(n1: impl Into<BigInt>, n2: impl Into<BigInt>) -> Self {
        Self {
            n1: n1.into(),
            n2: n2.into(),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.n1.is_zero() && self.n2.is_zero()
    }

    /// Component `k ∈ {0, 1}`.
    pub fn component(&self, k: usize) -> &BigInt {
        if k == 0 {
            &self.n1
        } else {
            &self.n2
        }
    }
}

impl Add<&DegreeVector> for &DegreeVector {
    type Output = DegreeVector;
    fn add(self, rhs: &DegreeVector) -> DegreeVector {
        DegreeVector {
            n1: &self.n1 + &rhs.n1,
            n2: &self.n2 + &rhs.n2,
        }
    }
}

impl Sub<&DegreeVector> for &DegreeVector {
    type Output = DegreeVector;
    fn sub(self, rhs: &DegreeVector) -> DegreeVector {
        DegreeVector {
            n1: &self.n1 - &rhs.n1,
            n2: &self.n2 - &rhs.n2,
        }
    }
}

impl Neg for &DegreeVector {
    type Output = DegreeVector;
    fn neg(self) -> DegreeVector {
        DegreeVector {
            n1: -&self.n1,
            n2: -&self.n2,
        }
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.n1, self.n2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub degree: DegreeVector,
    /// Index of `g*`, when the presentation carries an involution.
    pub star: Option<usize>,
}

impl Generator {
    pub fn new(name: &str, n1: i64, n2: i64) -> Self {
        Self {
            name: name.to_string(),
            degree: DegreeVector::new(n1, n2),
            star: None,
        }
    }

    pub fn with_star(mut self, partner: usize) -> Self {
        self.star = Some(partner);
        self
    }
}

/// Generators with bidegrees and pure λ-commutation relations
/// `gᵢgⱼ = λ^{c_{ij}} gⱼgᵢ`.
///
/// Normal-ordered words (nondecreasing generator index) form a basis, since
/// the rewriting `gᵢgⱼ → λ^{c_{ij}} gⱼgᵢ` for `i > j` is confluent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPresentation {
    name: String,
    generators: Vec<Generator>,
    commutation: Vec<Vec<BigInt>>,
}

const RESERVED: [&str; 2] = ["L", "i"];

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
        && !RESERVED.contains(&name)
}

impl GradedPresentation {
    pub fn new(
        name: &str,
        generators: Vec<Generator>,
        commutation: Vec<Vec<BigInt>>,
    ) -> Result<Self, AlgebraError> {
        let n = generators.len();
        let mut seen = BTreeSet::new();
        for g in &generators {
            if !valid_name(&g.name) {
                return Err(AlgebraError::InvalidGeneratorName(g.name.clone()));
            }
            if !seen.insert(g.name.as_str()) {
                return Err(AlgebraError::DuplicateGenerator(g.name.clone()));
            }
        }
        if commutation.len() != n || commutation.iter().any(|row| row.len() != n) {
            return Err(AlgebraError::CommutationShape(n));
        }
        for i in 0..n {
            if !commutation[i][i].is_zero() {
                return Err(AlgebraError::NonzeroDiagonal(generators[i].name.clone()));
            }
            for j in 0..i {
                if commutation[i][j] != -&commutation[j][i] {
                    return Err(AlgebraError::NotAntisymmetric(
                        generators[i].name.clone(),
                        generators[j].name.clone(),
                    ));
                }
            }
        }
        let starred = generators.iter().filter(|g| g.star.is_some()).count();
        if starred != 0 && starred != n {
            return Err(AlgebraError::PartialInvolution);
        }
        for (i, g) in generators.iter().enumerate() {
            let Some(s) = g.star else { continue };
            let partner = generators
                .get(s)
                .ok_or(AlgebraError::BadInvolution(g.name.clone()))?;
            if partner.star != Some(i) || partner.degree != -&g.degree {
                return Err(AlgebraError::BadInvolution(g.name.clone()));
            }
        }
        if starred == n {
            // (gᵢgⱼ)* = gⱼ*gᵢ* must respect the relations
            for i in 0..n {
                for j in 0..n {
                    let (si, sj) = (generators[i].star.unwrap(), generators[j].star.unwrap());
                    if commutation[si][sj] != commutation[i][j] {
                        return Err(AlgebraError::InvolutionBreaksRelations(
                            generators[i].name.clone(),
                            generators[j].name.clone(),
                        ));
                    }
                }
            }
        }
        Ok(Self {
            name: name.to_string(),
            generators,
            commutation,
        })
    }

    /// Commutative presentation (`c ≡ 0`).
    pub fn commutative(name: &str, generators: Vec<Generator>) -> Result<Self, AlgebraError> {
        let n = generators.len();
        Self::new(name, generators, vec![vec![BigInt::zero(); n]; n])
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn degree(&self, g: usize) -> &DegreeVector {
        &self.generators[g].degree
    }

    /// `c_{ij}` with `gᵢgⱼ = λ^{c_{ij}} gⱼgᵢ`.
    pub fn commutation(&self, i: usize, j: usize) -> &BigInt {
        &self.commutation[i][j]
    }

    pub fn commutation_matrix(&self) -> &[Vec<BigInt>] {
        &self.commutation
    }

    pub fn has_involution(&self) -> bool {
        self.generators.iter().all(|g| g.star.is_some()) && !self.generators.is_empty()
    }

    pub fn star_of(&self, g: usize) -> Option<usize> {
        self.generators[g].star
    }

    pub fn is_commutative(&self) -> bool {
        self.commutation.iter().flatten().all(Zero::is_zero)
    }

    /// Adds the λ-commutation coming from the graded star product:
    /// `c'_{ij} = c_{ij} + n₁ⁱn₂ʲ − n₁ʲn₂ⁱ`.
    pub fn quantize(&self) -> Self {
        let n = self.len();
        let mut c = self.commutation.clone();
        for i in 0..n {
            for j in 0..n {
                let (a, b) = (self.degree(i), self.degree(j));
                c[i][j] += &a.n1 * &b.n2 - &b.n1 * &a.n2;
            }
        }
        Self {
            name: format!("{}_L", self.name),
            generators: self.generators.clone(),
            commutation: c,
        }
    }

    /// Same presentation under a different name.
    pub fn renamed(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }
}
