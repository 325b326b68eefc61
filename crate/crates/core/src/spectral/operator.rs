use std::collections::BTreeMap;

use nalgebra::DMatrix;

use super::C64;

/// Sparse operator on the truncated Hilbert space, stored by columns,
/// together with the columns on which it agrees with the untruncated
/// operator. Everything outside the valid columns is ignored by norms and
/// residuals.
#[derive(Clone, Debug)]
pub struct WindowedOperator {
    columns: Vec<Vec<(usize, C64)>>,
    valid: Vec<bool>,
}

fn merge(mut entries: Vec<(usize, C64)>) -> Vec<(usize, C64)> {
    entries.sort_by_key(|e| e.0);
    let mut out: Vec<(usize, C64)> = Vec::with_capacity(entries.len());
    for (i, v) in entries {
        match out.last_mut() {
            Some((j, w)) if *j == i => *w += v,
            _ => out.push((i, v)),
        }
    }
    out.retain(|e| e.1 != C64::new(0.0, 0.0));
    out
}

impl WindowedOperator {
    /// The zero operator with no valid column.
    pub fn zero(dim: usize) -> Self {
        Self {
            columns: vec![Vec::new(); dim],
            valid: vec![false; dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            columns: (0..dim).map(|j| vec![(j, C64::new(1.0, 0.0))]).collect(),
            valid: vec![true; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.columns.len()
    }

    pub fn set_column(&mut self, j: usize, entries: Vec<(usize, C64)>, valid: bool) {
        self.columns[j] = merge(entries);
        self.valid[j] = valid;
    }

    pub(crate) fn set_all_valid(&mut self) {
        self.valid.iter_mut().for_each(|v| *v = true);
    }

    pub fn column(&self, j: usize) -> &[(usize, C64)] {
        &self.columns[j]
    }

    pub fn is_valid(&self, j: usize) -> bool {
        self.valid[j]
    }

    pub fn valid_count(&self) -> usize {
        self.valid.iter().filter(|v| **v).count()
    }

    /// `self · other`; a column is valid if it is valid for `other` and all
    /// columns of `self` it reaches are valid.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.dim());
        for j in 0..other.dim() {
            let mut valid = other.valid[j];
            let mut entries = Vec::new();
            for &(k, b) in &other.columns[j] {
                valid &= self.valid[k];
                entries.extend(self.columns[k].iter().map(|&(i, a)| (i, a * b)));
            }
            out.set_column(j, if valid { entries } else { Vec::new() }, valid);
        }
        out
    }

    fn combine(&self, other: &Self, sign: f64) -> Self {
        let mut out = Self::zero(self.dim());
        for j in 0..self.dim() {
            let valid = self.valid[j] && other.valid[j];
            let entries = if valid {
                let mut e = self.columns[j].clone();
                e.extend(other.columns[j].iter().map(|&(i, v)| (i, v * sign)));
                e
            } else {
                Vec::new()
            };
            out.set_column(j, entries, valid);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, 1.0)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, -1.0)
    }

    pub fn scale(&self, c: C64) -> Self {
        let mut out = self.clone();
        for col in &mut out.columns {
            *col = merge(col.iter().map(|&(i, v)| (i, v * c)).collect());
        }
        out
    }

    /// `[self, other]`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// Largest entry modulus over the valid columns.
    pub fn max_abs(&self) -> f64 {
        (0..self.dim())
            .filter(|&j| self.valid[j])
            .flat_map(|j| self.columns[j].iter().map(|e| e.1.norm()))
            .fold(0.0, f64::max)
    }

    /// Operator norm of the restriction to the valid columns: the square root
    /// of the top eigenvalue of the Gram matrix, computed per block of
    /// columns that share rows.
    pub fn norm(&self) -> f64 {
        let valid: Vec<usize> = (0..self.dim()).filter(|&j| self.valid[j]).collect();
        let mut parent: BTreeMap<usize, usize> = valid.iter().map(|&j| (j, j)).collect();
        fn find(parent: &mut BTreeMap<usize, usize>, x: usize) -> usize {
            let p = parent[&x];
            if p == x {
                return x;
            }
            let root = find(parent, p);
            parent.insert(x, root);
            root
        }
        let mut row_owner: BTreeMap<usize, usize> = BTreeMap::new();
        for &j in &valid {
            for &(i, _) in &self.columns[j] {
                match row_owner.get(&i) {
                    None => {
                        row_owner.insert(i, j);
                    }
                    Some(&k) => {
                        let (a, b) = (find(&mut parent, j), find(&mut parent, k));
                        if a != b {
                            parent.insert(a, b);
                        }
                    }
                }
            }
        }
        let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &j in &valid {
            let root = find(&mut parent, j);
            blocks.entry(root).or_default().push(j);
        }
        let mut best = 0.0f64;
        for cols in blocks.values() {
            let k = cols.len();
            let dense: Vec<BTreeMap<usize, C64>> = cols
                .iter()
                .map(|&j| self.columns[j].iter().cloned().collect())
                .collect();
            let gram = DMatrix::from_fn(k, k, |a, b| {
                dense[a]
                    .iter()
                    .filter_map(|(i, x)| dense[b].get(i).map(|y| x.conj() * y))
                    .sum::<C64>()
            });
            let top = gram
                .symmetric_eigenvalues()
                .iter()
                .cloned()
                .fold(0.0, f64::max);
            best = best.max(top.max(0.0).sqrt());
        }
        best
    }

    /// `max |self_{ij} − conj(other_{ji})|` over valid columns `j` of `self`
    /// and valid columns `i` of `other`.
    pub fn adjoint_residual(&self, other: &Self) -> f64 {
        let lookup = |op: &Self, col: usize, row: usize| -> C64 {
            let c = &op.columns[col];
            c.binary_search_by_key(&row, |e| e.0)
                .map(|k| c[k].1)
                .unwrap_or_default()
        };
        let mut worst = 0.0f64;
        for j in (0..self.dim()).filter(|&j| self.valid[j]) {
            for &(i, v) in self.columns[j].iter().filter(|e| other.valid[e.0]) {
                worst = worst.max((v - lookup(other, i, j).conj()).norm());
            }
        }
        for i in (0..other.dim()).filter(|&i| other.valid[i]) {
            for &(j, w) in other.columns[i].iter().filter(|e| self.valid[e.0]) {
                worst = worst.max((lookup(self, j, i) - w.conj()).norm());
            }
        }
        worst
    }

    /// `max |self − other|` over columns valid for both.
    pub fn residual(&self, other: &Self) -> f64 {
        let mut out = self.clone();
        for j in 0..self.dim() {
            out.valid[j] = self.valid[j] && other.valid[j];
        }
        out.sub(other).max_abs()
    }

    pub fn apply(&self, j: usize) -> Option<&[(usize, C64)]> {
        self.valid[j].then(|| self.columns[j].as_slice())
    }
}
