//! Seeded, platform-independent sampling of basis words and elements.
//!
//! The generator is SplitMix64 (64-bit state, `seed_from_u64(seed)`), so a
//! seed reproduces the same counterexamples on every platform.

use std::collections::BTreeMap;
use std::sync::Arc;

use num::BigRational;
use rand::{RngExt, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::algebra::{BasisKey, DegreeVector, Element, GradedPresentation, Word};
use crate::scalars::{Gaussian, Scalar};

pub struct Sampler {
    rng: SplitMix64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: SplitMix64::seed_from_u64(seed),
        }
    }

    pub fn index(&mut self, len: usize) -> usize {
        self.rng.random_range(0..len)
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.random_range(lo..=hi)
    }

    /// Small nonzero Gaussian rational.
    pub fn gaussian(&mut self) -> Gaussian {
        loop {
            let den = self.int(1, 2);
            let re = BigRational::new(self.int(-3, 3).into(), den.into());
            let im = BigRational::new(self.int(-2, 2).into(), 1.into());
            let c = Gaussian::new(re, im);
            if !num::Zero::is_zero(&c) {
                return c;
            }
        }
    }

    /// One or two terms `c·λ^k` with `|k| ≤ 2`.
    pub fn scalar(&mut self) -> Scalar {
        let terms = self.int(1, 2);
        let mut s = Scalar::zero();
        for _ in 0..terms {
            let c = self.gaussian();
            let k = self.int(-2, 2);
            s += &Scalar::monomial(c, k);
        }
        if s.is_zero() {
            Scalar::one()
        } else {
            s
        }
    }

    pub fn word<'a>(&mut self, words: &'a [Word]) -> &'a Word {
        &words[self.index(words.len())]
    }

    /// Random combination of up to `max_terms` words.
    pub fn element(
        &mut self,
        p: &Arc<GradedPresentation>,
        words: &[Word],
        max_terms: usize,
    ) -> Element {
        let n = self.int(1, max_terms as i64) as usize;
        let mut e = Element::zero(p);
        for _ in 0..n {
            let w = self.word(words).clone();
            let c = self.scalar();
            e.add_term(w, c);
        }
        e
    }

    /// Random homogeneous element: a random word plus up to
    /// `max_terms - 1` more words of the same degree.
    pub fn homogeneous(
        &mut self,
        p: &Arc<GradedPresentation>,
        by_degree: &WordsByDegree,
        max_terms: usize,
    ) -> Element {
        let words = &by_degree.words;
        let first = self.word(words).clone();
        let same = &by_degree.groups[&first.degree(p)];
        let mut e = Element::term(p, first, self.scalar());
        let extra = self.int(0, max_terms as i64 - 1);
        for _ in 0..extra {
            let w = same[self.index(same.len())].clone();
            let c = self.scalar();
            e.add_term(w, c);
        }
        if e.is_zero() {
            self.homogeneous(p, by_degree, max_terms)
        } else {
            e
        }
    }
}

/// Size and seed of a randomized check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleSpec {
    pub max_degree: u32,
    pub trials: usize,
    pub seed: u64,
}

impl Default for SampleSpec {
    fn default() -> Self {
        Self {
            max_degree: 5,
            trials: 200,
            seed: 0,
        }
    }
}

impl SampleSpec {
    /// `trials` tuples of `arity` random homogeneous elements with words of
    /// length at most `max_degree`.
    pub fn homogeneous_tuples(
        &self,
        p: &Arc<GradedPresentation>,
        arity: usize,
    ) -> Vec<Vec<Element>> {
        let by_degree = WordsByDegree::new(p, self.max_degree);
        let mut s = Sampler::new(self.seed);
        (0..self.trials)
            .map(|_| {
                (0..arity)
                    .map(|_| s.homogeneous(p, &by_degree, 3))
                    .collect()
            })
            .collect()
    }

    /// `trials` random (not necessarily homogeneous) elements.
    pub fn elements(&self, p: &Arc<GradedPresentation>, arity: usize) -> Vec<Vec<Element>> {
        let words = enumerate_words(p.len(), self.max_degree);
        let mut s = Sampler::new(self.seed);
        (0..self.trials)
            .map(|_| (0..arity).map(|_| s.element(p, &words, 3)).collect())
            .collect()
    }
}

/// Every normal-ordered word over `n` generators of total length at most
/// `max_len`, shortest first.
pub fn enumerate_words(n: usize, max_len: u32) -> Vec<Word> {
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    fn rec(pos: usize, left: u32, current: &mut Vec<u32>, out: &mut Vec<Word>) {
        if pos == current.len() {
            out.push(Word::from_exponents(current.clone()));
            return;
        }
        for e in 0..=left {
            current[pos] = e;
            rec(pos + 1, left - e, current, out);
        }
        current[pos] = 0;
    }
    rec(0, max_len, &mut current, &mut out);
    out.sort();
    out
}

/// Words grouped by bidegree, for homogeneous sampling.
pub struct WordsByDegree {
    pub words: Vec<Word>,
    pub groups: BTreeMap<DegreeVector, Vec<Word>>,
}

impl WordsByDegree {
    pub fn new(p: &GradedPresentation, max_len: u32) -> Self {
        let words = enumerate_words(p.len(), max_len);
        let mut groups: BTreeMap<DegreeVector, Vec<Word>> = BTreeMap::new();
        for w in &words {
            groups.entry(w.degree(p)).or_default().push(w.clone());
        }
        Self { words, groups }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_count_is_binomial() {
        // C(n + d, d) monomials of degree ≤ d in n variables
        assert_eq!(enumerate_words(3, 5).len(), 56);
        assert_eq!(enumerate_words(6, 5).len(), 462);
        assert_eq!(enumerate_words(2, 0).len(), 1);
    }

    #[test]
    fn same_seed_same_stream() {
        let mut a = Sampler::new(42);
        let mut b = Sampler::new(42);
        let xs: Vec<i64> = (0..20).map(|_| a.int(-100, 100)).collect();
        let ys: Vec<i64> = (0..20).map(|_| b.int(-100, 100)).collect();
        assert_eq!(xs, ys);
    }
}
