use std::f64::consts::TAU;
use std::sync::Arc;

use nalgebra::Complex;
use num::{BigInt, BigRational, Integer, Signed, ToPrimitive, Zero};

use crate::algebra::{DegreeVector, Element, GradedPresentation, Quantization};
use crate::scalars::{Gaussian, Scalar};

use super::{SpectralError, WindowedOperator};

pub type C64 = Complex<f64>;

/// Truncated spectral triple of a commutative bi-graded algebra represented
/// by mode shifts on `ℓ²(ℤ²) ⊗ ℂ²`: modes `e_{n,m}` with `|n|, |m| ≤ N`,
/// `g ▷ e_{n,m} = e_{(n,m)+deg g}`, and `D = n σ₁ + m σ₂`.
///
/// The deformed representation is `ul a · v = μ(Ψ⁻¹(a ⊗ v))`, so a basis
/// word of degree `(s₁,s₂)` acts as `e_{n,m} ↦ λ^{s₁ m} e_{n+s₁,m+s₂}` with
/// `λ = exp(2πiθ)`.
#[derive(Clone, Debug)]
pub struct SpectralModel {
    cutoff: i64,
    theta: BigRational,
    roots: Vec<C64>,
    quantization: Quantization,
}

fn gaussian_to_c64(c: &Gaussian) -> C64 {
    C64::new(
        c.re.to_f64().unwrap_or(f64::NAN),
        c.im.to_f64().unwrap_or(f64::NAN),
    )
}

impl SpectralModel {
    pub fn new(
        presentation: &Arc<GradedPresentation>,
        cutoff: i64,
        theta: BigRational,
    ) -> Result<Self, SpectralError> {
        if !presentation.is_commutative() {
            return Err(SpectralError::NotCommutative(
                presentation.name().to_string(),
            ));
        }
        if cutoff < 1 {
            return Err(SpectralError::Cutoff(cutoff));
        }
        let den = theta
            .denom()
            .to_usize()
            .filter(|&d| d <= 1 << 20)
            .ok_or(SpectralError::Theta(theta.to_string()))?;
        let roots = (0..den)
            .map(|j| C64::from_polar(1.0, TAU * j as f64 / den as f64))
            .collect();
        Ok(Self {
            cutoff,
            theta,
            roots,
            quantization: Quantization::new(presentation),
        })
    }

    pub fn cutoff(&self) -> i64 {
        self.cutoff
    }

    pub fn theta(&self) -> &BigRational {
        &self.theta
    }

    pub fn quantization(&self) -> &Quantization {
        &self.quantization
    }

    /// The same model at `θ = 0`, i.e. the undeformed triple.
    pub fn undeformed(&self) -> Self {
        Self::new(self.quantization.source(), self.cutoff, BigRational::zero())
            .expect("valid model")
    }

    pub fn with_cutoff(&self, cutoff: i64) -> Result<Self, SpectralError> {
        Self::new(self.quantization.source(), cutoff, self.theta.clone())
    }

    fn side(&self) -> usize {
        (2 * self.cutoff + 1) as usize
    }

    pub fn dim(&self) -> usize {
        2 * self.side() * self.side()
    }

    /// Basis index of `e_{n,m} ⊗ s`, if the mode lies in the window.
    pub fn index(&self, n: &BigInt, m: &BigInt, s: usize) -> Option<usize> {
        self.index_i64(n.to_i64()?, m.to_i64()?, s)
    }

    fn index_i64(&self, n: i64, m: i64, s: usize) -> Option<usize> {
        if n.abs() > self.cutoff || m.abs() > self.cutoff {
            return None;
        }
        let side = self.side() as i64;
        Some((((n + self.cutoff) * side + (m + self.cutoff)) * 2) as usize + s)
    }

    fn lambda_pow_i64(&self, k: i64) -> C64 {
        let den = self.roots.len() as i64;
        let num = self
            .theta
            .numer()
            .mod_floor(&BigInt::from(den))
            .to_i64()
            .expect("reduced");
        self.roots[(num * k.rem_euclid(den)).rem_euclid(den) as usize]
    }

    /// `(n, m, s)` of a basis index.
    pub fn mode(&self, index: usize) -> (i64, i64, usize) {
        let s = index % 2;
        let cell = (index / 2) as i64;
        let side = self.side() as i64;
        (cell / side - self.cutoff, cell % side - self.cutoff, s)
    }

    /// `λ^k`, with the exponent reduced exactly modulo the denominator of θ.
    pub fn lambda_pow(&self, k: &BigInt) -> C64 {
        let den = BigInt::from(self.roots.len());
        let j = (self.theta.numer() * k).mod_floor(&den);
        self.roots[j.to_usize().expect("reduced below the denominator")]
    }

    /// Evaluates a scalar at `λ = exp(2πiθ)` via exact exponent reduction.
    pub fn eval(&self, s: &Scalar) -> C64 {
        s.terms()
            .map(|(k, c)| gaussian_to_c64(c) * self.lambda_pow(k))
            .sum()
    }

    /// Evaluates a scalar in floating point, `λ^k = exp(2πiθk)` computed from
    /// `θ` as an `f64`; an independent path used to cross-check [`Self::eval`].
    pub fn eval_float(&self, s: &Scalar) -> C64 {
        let theta = self.theta.to_f64().unwrap_or(f64::NAN);
        s.terms()
            .map(|(k, c)| {
                let k = k.to_f64().unwrap_or(f64::NAN);
                gaussian_to_c64(c) * C64::from_polar(1.0, TAU * theta * k)
            })
            .sum()
    }

    /// The Dirac operator `D(e_{n,m} ⊗ s) = e_{n,m} ⊗ (nσ₁ + mσ₂)s`.
    pub fn dirac(&self) -> WindowedOperator {
        let mut op = WindowedOperator::zero(self.dim());
        for j in 0..self.dim() {
            let (n, m, s) = self.mode(j);
            let other = j - s + (1 - s);
            // σ₁ = [[0,1],[1,0]], σ₂ = [[0,−i],[i,0]]
            let coeff = if s == 0 {
                C64::new(n as f64, m as f64)
            } else {
                C64::new(n as f64, -(m as f64))
            };
            op.set_column(j, vec![(other, coeff)], true);
        }
        op
    }

    /// `hᵢ` acting diagonally by the mode's degree component.
    pub fn cartan(&self, slot: usize) -> WindowedOperator {
        let mut op = WindowedOperator::zero(self.dim());
        for j in 0..self.dim() {
            let (n, m, _) = self.mode(j);
            let value = if slot == 0 { n } else { m } as f64;
            op.set_column(j, vec![(j, C64::new(value, 0.0))], true);
        }
        op
    }

    /// Largest `max(|s₁|,|s₂|)` over the words of `a`.
    pub fn shift_budget(&self, a: &Element) -> BigInt {
        let p = a.presentation();
        a.terms()
            .map(|(w, _)| {
                let d = crate::algebra::BasisKey::degree(w, p);
                d.n1.abs().max(d.n2.abs())
            })
            .max()
            .unwrap_or_default()
    }

    fn check_budget(&self, a: &Element) -> Result<(), SpectralError> {
        let needed = self.shift_budget(a);
        if needed > BigInt::from(self.cutoff) {
            return Err(SpectralError::Budget {
                needed: needed.to_string(),
                cutoff: self.cutoff,
            });
        }
        Ok(())
    }

    /// Closed form of the deformed representation of `a ∈ A_λ`: rewrite `a`
    /// as `Σ c_w ul(w)` and let each `ul(w)` act by the phase-shift rule.
    pub fn rep_deformed(&self, a: &Element) -> Result<WindowedOperator, SpectralError> {
        let classical = self.quantization.unlift(a)?;
        self.check_budget(&classical)?;
        let p = classical.presentation().clone();
        // shifts fit in i64 after the budget check
        let terms: Vec<(i64, i64, C64)> = classical
            .terms()
            .map(|(w, c)| {
                let d: DegreeVector = crate::algebra::BasisKey::degree(w, &p);
                (
                    d.n1.to_i64().expect("within budget"),
                    d.n2.to_i64().expect("within budget"),
                    self.eval(c),
                )
            })
            .collect();
        let mut op = WindowedOperator::zero(self.dim());
        for j in 0..self.dim() {
            let (n, m, s) = self.mode(j);
            let mut column = Vec::with_capacity(terms.len());
            let mut valid = true;
            for &(s1, s2, c) in &terms {
                match self.index_i64(n + s1, m + s2, s) {
                    Some(i) => column.push((i, c * self.lambda_pow_i64(s1 * m))),
                    None => valid = false,
                }
            }
            op.set_column(j, if valid { column } else { Vec::new() }, valid);
        }
        Ok(op)
    }

    /// `ul g` for a single generator, built from the phase rule directly.
    pub fn rep_generator(&self, g: usize) -> Result<WindowedOperator, SpectralError> {
        let p = self.quantization.target().clone();
        self.rep_deformed(&Element::generator(&p, g))
    }

    /// `rep(a)` assembled as a polynomial in the generator operators with
    /// floating-point coefficients; an independent path for the
    /// homomorphism and exact-vs-float cross-checks.
    pub fn rep_via_generators(&self, a: &Element) -> Result<WindowedOperator, SpectralError> {
        let q = &self.quantization;
        q.unlift(a)?;
        let p = q.target().clone();
        let gens = (0..p.len())
            .map(|g| self.rep_generator(g))
            .collect::<Result<Vec<_>, _>>()?;
        let mut out = WindowedOperator::zero(self.dim());
        out.set_all_valid();
        for (w, c) in a.terms() {
            // intrinsic basis word [w] = g₁ * g₂ * ⋯ in A_λ
            let mut term = WindowedOperator::identity(self.dim());
            for g in w.sequence() {
                term = term.mul(&gens[g]);
            }
            out = out.add(&term.scale(self.eval_float(c)));
        }
        Ok(out)
    }
}
