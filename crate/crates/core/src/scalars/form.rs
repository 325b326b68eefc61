use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, One, Signed, Zero};

use super::ScalarError;

/// Product of symbolic degree variables with positive exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(BTreeMap<String, u32>);

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(name: &str) -> Self {
        Self(BTreeMap::from([(name.to_string(), 1)]))
    }

    pub fn total_degree(&self) -> u32 {
        self.0.values().sum()
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = self.0.clone();
        for (v, e) in &other.0 {
            *out.entry(v.clone()).or_insert(0) += e;
        }
        Self(out)
    }
}

/// Integer polynomial in symbolic degree variables (`p1, p2, q1, ...`), used
/// as a λ-exponent that is valid for every assignment of degrees.
///
/// Every form carries its ambient variable set; ring operations take the
/// union, and [`form_identity_check`] insists both sides were built over the
/// same set.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DegreeForm {
    vars: BTreeSet<String>,
    terms: BTreeMap<Monomial, BigInt>,
}

impl DegreeForm {
    pub fn zero(vars: &[&str]) -> Self {
        Self {
            vars: vars.iter().map(|v| v.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], c: impl Into<BigInt>) -> Self {
        let mut out = Self::zero(vars);
        out.add_term(Monomial::one(), c.into());
        out
    }

    /// The variable `name`, which must belong to `vars`.
    pub fn var(vars: &[&str], name: &str) -> Result<Self, ScalarError> {
        if !vars.contains(&name) {
            return Err(ScalarError::UnknownVariable(name.to_string()));
        }
        let mut out = Self::zero(vars);
        out.add_term(Monomial::var(name), BigInt::one());
        Ok(out)
    }

    pub fn vars(&self) -> &BTreeSet<String> {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    fn merged_vars(&self, other: &Self) -> BTreeSet<String> {
        self.vars.union(&other.vars).cloned().collect()
    }

    /// Evaluates at integer values; every variable that occurs must be bound.
    pub fn evaluate(&self, values: &BTreeMap<String, BigInt>) -> Result<BigInt, ScalarError> {
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, e) in &m.0 {
                let x = values
                    .get(v)
                    .ok_or_else(|| ScalarError::UnboundVariable(v.clone()))?;
                term *= num::pow(x.clone(), *e as usize);
            }
            total += term;
        }
        Ok(total)
    }

    /// Replaces variables by forms; unmapped variables are kept. The result
    /// lives over `vars`.
    pub fn substitute(&self, map: &BTreeMap<&str, DegreeForm>, vars: &[&str]) -> Self {
        let mut out = Self::zero(vars);
        for (m, c) in &self.terms {
            let mut term = Self::constant(vars, c.clone());
            for (v, e) in &m.0 {
                let factor = match map.get(v.as_str()) {
                    Some(f) => f.clone(),
                    None => {
                        let mut f = Self::zero(vars);
                        f.add_term(Monomial::var(v), BigInt::one());
                        f
                    }
                };
                for _ in 0..*e {
                    term = &term * &factor;
                }
            }
            out = &out + &term;
        }
        out.vars = vars.iter().map(|v| v.to_string()).collect();
        out
    }

    /// Total degree of the highest monomial, `None` for the zero form.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }
}

/// Decides `f = g` as polynomials: true iff the identity holds for all
/// integer assignments of the variables.
pub fn form_identity_check(f: &DegreeForm, g: &DegreeForm) -> Result<bool, ScalarError> {
    if f.vars != g.vars {
        return Err(ScalarError::VariableMismatch {
            left: f.vars.iter().cloned().collect(),
            right: g.vars.iter().cloned().collect(),
        });
    }
    Ok((f - g).is_zero())
}

impl Add<&DegreeForm> for &DegreeForm {
    type Output = DegreeForm;
    fn add(self, rhs: &DegreeForm) -> DegreeForm {
        let mut out = self.clone();
        out.vars = self.merged_vars(rhs);
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Neg for &DegreeForm {
    type Output = DegreeForm;
    fn neg(self) -> DegreeForm {
        DegreeForm {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Sub<&DegreeForm> for &DegreeForm {
    type Output = DegreeForm;
    fn sub(self, rhs: &DegreeForm) -> DegreeForm {
        self + &(-rhs)
    }
}

impl Mul<&DegreeForm> for &DegreeForm {
    type Output = DegreeForm;
    fn mul(self, rhs: &DegreeForm) -> DegreeForm {
        let mut out = DegreeForm {
            vars: self.merged_vars(rhs),
            terms: BTreeMap::new(),
        };
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for DegreeForm {
            type Output = DegreeForm;
            fn $f(self, rhs: DegreeForm) -> DegreeForm {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for DegreeForm {
    type Output = DegreeForm;
    fn neg(self) -> DegreeForm {
        -&self
    }
}

impl fmt::Display for DegreeForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { "-" } else { "+" })?;
            }
            let abs = c.abs();
            let factors: Vec<String> =
                m.0.iter()
                    .map(|(v, e)| {
                        if *e == 1 {
                            v.clone()
                        } else {
                            format!("{v}^{e}")
                        }
                    })
                    .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for DegreeForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DegreeForm({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const VARS: [&str; 6] = ["p1", "p2", "q1", "q2", "r1", "r2"];

    fn v(name: &str) -> DegreeForm {
        DegreeForm::var(&VARS, name).unwrap()
    }

    #[test]
    fn cocycle_display_identity() {
        // −p₁q₂ − (p₁+q₁)r₂  vs  −q₁r₂ − p₁(q₂+r₂)
        let f = &(-&(&v("p1") * &v("q2"))) - &(&(&v("p1") + &v("q1")) * &v("r2"));
        let g = &(-&(&v("q1") * &v("r2"))) - &(&v("p1") * &(&v("q2") + &v("r2")));
        assert!(form_identity_check(&f, &g).unwrap());
    }

    #[test]
    fn asymmetric_bilinear_forms_differ() {
        let f = &v("p1") * &v("q2");
        let g = &v("q1") * &v("p2");
        assert!(!form_identity_check(&f, &g).unwrap());
    }

    #[test]
    fn expanded_product_identity() {
        let f = &(&(&v("p1") + &v("q1")) * &(&v("p2") + &v("q2"))) - &(&v("p1") * &v("q2"));
        let g = &(&(&v("p1") * &v("p2")) + &(&v("q1") * &v("p2"))) + &(&v("q1") * &v("q2"));
        assert!(form_identity_check(&f, &g).unwrap());
    }

    #[test]
    fn variable_set_mismatch_is_an_error() {
        let f = DegreeForm::var(&["p1", "q2"], "p1").unwrap();
        let g = DegreeForm::var(&["p1", "q1"], "p1").unwrap();
        assert!(matches!(
            form_identity_check(&f, &g),
            Err(ScalarError::VariableMismatch { .. })
        ));
        assert!(DegreeForm::var(&["p1"], "x").is_err());
    }

    #[test]
    fn substitution_and_evaluation() {
        let f = &v("p1") * &v("q2");
        let sum = &v("p1") + &v("q1");
        let g = f.substitute(&BTreeMap::from([("p1", sum)]), &VARS);
        let vals: BTreeMap<String, BigInt> = VARS
            .iter()
            .enumerate()
            .map(|(i, n)| (n.to_string(), BigInt::from(i as i64 + 1)))
            .collect();
        // (p1 + q1)·q2 at p1=1, q1=3, q2=4
        assert_eq!(g.evaluate(&vals).unwrap(), BigInt::from(16));
        assert!(f.evaluate(&BTreeMap::new()).is_err());
    }

    #[test]
    fn rendering() {
        let f = &(-&(&v("p1") * &v("q2"))) + &DegreeForm::constant(&VARS, 3);
        assert_eq!(f.to_string(), "3 - p1*q2");
    }
}
