use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num::{BigInt, BigRational, Complex, One, Signed, Zero};

/// Gaussian rational `a + b·i` with `a, b ∈ ℚ`.
pub type Gaussian = Complex<BigRational>;

pub fn gaussian(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Gaussian {
    Complex::new(
        BigRational::from_integer(re.into()),
        BigRational::from_integer(im.into()),
    )
}

pub fn gaussian_from_rational(re: BigRational) -> Gaussian {
    Complex::new(re, BigRational::zero())
}

/// Laurent polynomial in the unimodular parameter λ with Gaussian-rational
/// coefficients.
///
/// Stored canonically: one coefficient per exponent, zero coefficients
/// dropped, so structural equality is ring equality. The involution
/// [`Scalar::conj`] sends `λ ↦ λ⁻¹` and conjugates coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    terms: BTreeMap<BigInt, Gaussian>,
}

impl Scalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::lambda_pow(0)
    }

    /// `λ^k`.
    pub fn lambda_pow(k: impl Into<BigInt>) -> Self {
        Self::monomial(Gaussian::one(), k)
    }

    /// `c·λ^k`.
    pub fn monomial(c: Gaussian, k: impl Into<BigInt>) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k.into(), c);
        }
        Self { terms }
    }

    pub fn from_gaussian(c: Gaussian) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self::from_gaussian(gaussian(n, 0))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::from_gaussian(gaussian_from_rational(r))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::from_gaussian(gaussian(0, 1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Iterates `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&BigInt, &Gaussian)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient and exponent when `self = c·λ^k` is a single term.
    pub fn as_monomial(&self) -> Option<(&Gaussian, &BigInt)> {
        match self.terms.len() {
            1 => self.terms.iter().next().map(|(k, c)| (c, k)),
            _ => None,
        }
    }

    /// The coefficient of `λ⁰` if this is a constant.
    pub fn as_constant(&self) -> Option<Gaussian> {
        if self.is_zero() {
            return Some(Gaussian::zero());
        }
        match self.as_monomial() {
            Some((c, k)) if k.is_zero() => Some(c.clone()),
            _ => None,
        }
    }

    /// Multiplicative inverse; only units of the Laurent ring (`c·λ^k`,
    /// `c ≠ 0`) are invertible.
    pub fn inverse(&self) -> Option<Self> {
        let (c, k) = self.as_monomial()?;
        Some(Self::monomial(c.inv(), -k))
    }

    /// The involution: `λ^k ↦ λ^{-k}`, `a + bi ↦ a − bi`.
    pub fn conj(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (-k, c.conj())).collect(),
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Gaussian) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Multiplies by `λ^k`.
    pub fn shift(&self, k: &BigInt) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    fn add_term(&mut self, k: BigInt, c: Gaussian) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(k) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(mut self, rhs: Scalar) -> Scalar {
        self += &rhs;
        self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), c.clone());
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &rhs.terms {
                out.add_term(k1 + k2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Renders a Gaussian rational so that the expression parser reads it back.
pub fn fmt_gaussian(c: &Gaussian) -> String {
    let (re, im) = (&c.re, &c.im);
    let imag = |im: &BigRational| -> String {
        if im.is_one() {
            "i".to_string()
        } else if (-im).is_one() {
            "-i".to_string()
        } else {
            format!("{}*i", fmt_rational(im))
        }
    };
    if im.is_zero() {
        fmt_rational(re)
    } else if re.is_zero() {
        imag(im)
    } else {
        let sign = if im.is_negative() { "-" } else { "+" };
        format!("({}{}{})", fmt_rational(re), sign, imag(&im.abs()))
    }
}

impl fmt::Display for Scalar {
    /// `L` stands for λ: e.g. `(1+i)*L^-2 + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (k, c)) in self.terms.iter().enumerate() {
            let power = if k.is_zero() {
                String::new()
            } else if k.is_one() {
                "L".to_string()
            } else {
                format!("L^{k}")
            };
            let mut term = if power.is_empty() {
                fmt_gaussian(c)
            } else if c.is_one() {
                power
            } else if (-c).is_one() {
                format!("-{power}")
            } else {
                format!("{}*{power}", fmt_gaussian(c))
            };
            if idx > 0 {
                if let Some(rest) = term.strip_prefix('-') {
                    term = format!(" - {rest}");
                } else {
                    term = format!(" + {term}");
                }
            }
            f.write_str(&term)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(k: i64) -> Scalar {
        Scalar::lambda_pow(k)
    }

    #[test]
    fn inverse_exponents_cancel() {
        assert_eq!(&l(2) * &l(-2), Scalar::one());
    }

    #[test]
    fn gaussian_product() {
        let a = Scalar::monomial(gaussian(1, 1), 1);
        let b = Scalar::from_gaussian(gaussian(1, -1));
        assert_eq!(&a * &b, Scalar::monomial(gaussian(2, 0), 1));
    }

    #[test]
    fn difference_of_squares() {
        let a = &l(1) + &l(-1);
        let b = &l(1) - &l(-1);
        // distributivity by hand: λ² − 1 + 1 − λ⁻²
        let expected = &l(2) - &l(-2);
        assert_eq!(&a * &b, expected);
    }

    #[test]
    fn conj_examples() {
        assert_eq!(l(3).conj(), l(-3));
        let il = Scalar::monomial(gaussian(0, 1), 1);
        assert_eq!(il.conj(), Scalar::monomial(gaussian(0, -1), -1));
        let s = &Scalar::monomial(gaussian(2, 0), 1) + &Scalar::monomial(gaussian(0, 1), -2);
        assert_eq!(s.conj().conj(), s);
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let s = &l(1) - &l(1);
        assert!(s.is_zero());
        assert_eq!(s, Scalar::zero());
        assert!(Scalar::monomial(gaussian(0, 0), 5).is_zero());
    }

    #[test]
    fn inverse_of_units_only() {
        let u = Scalar::monomial(gaussian(1, 1), 3);
        assert_eq!(&u * &u.inverse().unwrap(), Scalar::one());
        assert!((&l(1) + &l(2)).inverse().is_none());
        assert!(Scalar::zero().inverse().is_none());
    }

    #[test]
    fn rendering() {
        assert_eq!(
            Scalar::monomial(gaussian(1, 1), -2).to_string(),
            "(1+i)*L^-2"
        );
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!((&l(1) - &Scalar::from_integer(3)).to_string(), "-3 + L");
        let half = BigRational::new(1.into(), 2.into());
        let c = Complex::new(half.clone(), -half);
        assert_eq!(Scalar::monomial(c, 1).to_string(), "(1/2-1/2*i)*L");
        assert_eq!((-Scalar::i()).to_string(), "-i");
        assert_eq!((-l(-1)).to_string(), "-L^-1");
    }
}
