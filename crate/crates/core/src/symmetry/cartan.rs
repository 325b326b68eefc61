use crate::algebra::DegreeVector;

use super::SymmetryError;

/// Cartan matrix plus the two Cartan generators `h₁, h₂` that grade the
/// algebra. Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanData {
    matrix: Vec<Vec<i64>>,
    picks: (usize, usize),
}

impl CartanData {
    pub fn new(matrix: Vec<Vec<i64>>, picks: (usize, usize)) -> Result<Self, SymmetryError> {
        let r = matrix.len();
        let invalid = |msg: String| Err(SymmetryError::InvalidCartan(msg));
        if r < 2 {
            return invalid(format!("rank {r} < 2"));
        }
        if matrix.iter().any(|row| row.len() != r) {
            return invalid("matrix is not square".into());
        }
        for i in 0..r {
            for j in 0..r {
                let a = matrix[i][j];
                if i == j && a != 2 {
                    return invalid(format!("diagonal entry a[{}][{}] = {a} != 2", i + 1, j + 1));
                }
                if i != j && a > 0 {
                    return invalid(format!(
                        "off-diagonal entry a[{}][{}] = {a} > 0",
                        i + 1,
                        j + 1
                    ));
                }
                if (a == 0) != (matrix[j][i] == 0) {
                    return invalid(format!(
                        "a[{}][{}] and a[{}][{}] disagree on zero",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    ));
                }
            }
        }
        if picks.0 >= r || picks.1 >= r || picks.0 == picks.1 {
            return invalid(format!(
                "pick-h ({}, {}) must be two distinct indices ≤ {r}",
                picks.0 + 1,
                picks.1 + 1
            ));
        }
        Ok(Self { matrix, picks })
    }

    /// `h₁, h₂` = first two Cartan generators.
    pub fn with_default_picks(matrix: Vec<Vec<i64>>) -> Result<Self, SymmetryError> {
        Self::new(matrix, (0, 1))
    }

    pub fn a2() -> Self {
        Self::with_default_picks(vec![vec![2, -1], vec![-1, 2]]).expect("A2 is valid")
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix[i][j]
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn picks(&self) -> (usize, usize) {
        self.picks
    }

    /// Which grading slot (0 for `h₁`, 1 for `h₂`) a Cartan index occupies.
    pub fn slot_of(&self, h: usize) -> Option<usize> {
        if h == self.picks.0 {
            Some(0)
        } else if h == self.picks.1 {
            Some(1)
        } else {
            None
        }
    }

    /// `αᵢ = a_{1i}`.
    pub fn alpha(&self, i: usize) -> i64 {
        self.matrix[self.picks.0][i]
    }

    /// `βᵢ = a_{2i}`.
    pub fn beta(&self, i: usize) -> i64 {
        self.matrix[self.picks.1][i]
    }

    /// Degree change `(αᵢ, βᵢ)` produced by `xᵢ⁺`.
    pub fn shift(&self, i: usize) -> DegreeVector {
        DegreeVector::new(self.alpha(i), self.beta(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_data() {
        let a2 = CartanData::a2();
        assert_eq!((a2.alpha(0), a2.beta(0)), (2, -1));
        assert_eq!((a2.alpha(1), a2.beta(1)), (-1, 2));
    }

    #[test]
    fn validation() {
        assert!(CartanData::with_default_picks(vec![vec![2]]).is_err());
        assert!(CartanData::with_default_picks(vec![vec![2, 1], vec![-1, 2]]).is_err());
        assert!(CartanData::with_default_picks(vec![vec![2, 0], vec![-1, 2]]).is_err());
        assert!(CartanData::with_default_picks(vec![vec![3, -1], vec![-1, 2]]).is_err());
        assert!(CartanData::new(vec![vec![2, -1], vec![-1, 2]], (1, 1)).is_err());
        // B2
        assert!(CartanData::with_default_picks(vec![vec![2, -2], vec![-1, 2]]).is_ok());
    }
}
