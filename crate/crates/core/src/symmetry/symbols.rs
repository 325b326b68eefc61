use std::fmt;

use num::{BigInt, One, Zero};

use crate::scalars::Scalar;

use super::SymmetryError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn both() -> [Sign; 2] {
        [Sign::Plus, Sign::Minus]
    }

    fn suffix(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Chevalley symbol or Cartan exponential. Cartan indices are 0-based and
/// rendered 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Symbol {
    H(usize),
    X(usize, Sign),
    /// `λ^{k·Hᵢ}`; `i` must be one of the two grading generators.
    Exp {
        h: usize,
        k: BigInt,
    },
    /// `λ^{k·H₁H₂}`; `k = 1` is the element `U`, `k = −1` is `U⁻¹`.
    QuadExp(BigInt),
}

impl Symbol {
    pub fn exp(h: usize, k: impl Into<BigInt>) -> Self {
        Symbol::Exp { h, k: k.into() }
    }

    pub fn u() -> Self {
        Symbol::QuadExp(BigInt::one())
    }

    pub fn u_inverse() -> Self {
        Symbol::QuadExp(-BigInt::one())
    }

    /// Parses `H1`, `X2+`, `X1-`, `U`, `U^-1`.
    pub fn parse(text: &str) -> Result<Self, SymmetryError> {
        let bad = || SymmetryError::UnknownSymbol(text.to_string());
        let index = |s: &str| -> Result<usize, SymmetryError> {
            match s.parse::<usize>() {
                Ok(i) if i >= 1 => Ok(i - 1),
                _ => Err(bad()),
            }
        };
        match text {
            "U" => return Ok(Symbol::u()),
            "U^-1" => return Ok(Symbol::u_inverse()),
            _ => {}
        }
        if let Some(rest) = text.strip_prefix('H') {
            return Ok(Symbol::H(index(rest)?));
        }
        if let Some(rest) = text.strip_prefix('X') {
            let (num, sign) = if let Some(n) = rest.strip_suffix('+') {
                (n, Sign::Plus)
            } else if let Some(n) = rest.strip_suffix('-') {
                (n, Sign::Minus)
            } else {
                return Err(bad());
            };
            return Ok(Symbol::X(index(num)?, sign));
        }
        Err(bad())
    }

    /// Star structure of the compact real form: `Hᵢ* = Hᵢ`, `(Xᵢ^±)* = Xᵢ^∓`,
    /// and `(λ^{k·H})* = λ^{−k·H}` since λ* = λ⁻¹.
    pub fn star(&self) -> Self {
        match self {
            Symbol::H(i) => Symbol::H(*i),
            Symbol::X(i, s) => Symbol::X(*i, s.flip()),
            Symbol::Exp { h, k } => Symbol::Exp { h: *h, k: -k },
            Symbol::QuadExp(k) => Symbol::QuadExp(-k),
        }
    }
}

fn fmt_coefficient(k: &BigInt) -> String {
    if k.is_one() {
        String::new()
    } else if (-k).is_one() {
        "-".to_string()
    } else {
        k.to_string()
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::H(i) => write!(f, "H{}", i + 1),
            Symbol::X(i, s) => write!(f, "X{}{}", i + 1, s.suffix()),
            Symbol::Exp { h, k } => write!(f, "L^({}H{})", fmt_coefficient(k), h + 1),
            Symbol::QuadExp(k) if k.is_one() => write!(f, "U"),
            Symbol::QuadExp(k) if (-k).is_one() => write!(f, "U^-1"),
            Symbol::QuadExp(k) => write!(f, "L^({}H1H2)", fmt_coefficient(k)),
        }
    }
}

/// Ordered product of symbols; as an operator the rightmost symbol acts
/// first, so `act(w₁w₂, a) = act(w₁, act(w₂, a))`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct OpWord(pub Vec<Symbol>);

impl OpWord {
    pub fn identity() -> Self {
        Self(Vec::new())
    }

    pub fn single(s: Symbol) -> Self {
        Self(vec![s])
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn then(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Self(v)
    }

    /// Whitespace-separated symbols; `1` for the identity.
    pub fn parse(text: &str) -> Result<Self, SymmetryError> {
        let text = text.trim();
        if text == "1" {
            return Ok(Self::identity());
        }
        text.split_whitespace()
            .map(Symbol::parse)
            .collect::<Result<Vec<_>, _>>()
            .map(Self)
    }

    /// Adjoint word: reversed order, each symbol starred.
    pub fn star(&self) -> Self {
        Self(self.0.iter().rev().map(Symbol::star).collect())
    }

    /// Drops `λ^{0·H}` factors and merges adjacent exponentials of the same
    /// Cartan generator.
    pub fn simplified(&self) -> Self {
        let mut out: Vec<Symbol> = Vec::new();
        for s in &self.0 {
            match (out.last_mut(), s) {
                (Some(Symbol::Exp { h: h1, k: k1 }), Symbol::Exp { h: h2, k: k2 }) if h1 == h2 => {
                    *k1 += k2;
                }
                (Some(Symbol::QuadExp(k1)), Symbol::QuadExp(k2)) => *k1 += k2,
                _ => out.push(s.clone()),
            }
            let vanished = matches!(out.last(), Some(Symbol::Exp { k, .. }) | Some(Symbol::QuadExp(k)) if k.is_zero());
            if vanished {
                out.pop();
            }
        }
        Self(out)
    }
}

impl fmt::Display for OpWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Linear combination of symbol words.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct OpExpr(pub Vec<(Scalar, OpWord)>);

impl OpExpr {
    pub fn word(w: OpWord) -> Self {
        Self(vec![(Scalar::one(), w)])
    }

    pub fn symbol(s: Symbol) -> Self {
        Self::word(OpWord::single(s))
    }

    pub fn identity() -> Self {
        Self::word(OpWord::identity())
    }

    pub fn zero() -> Self {
        Self(Vec::new())
    }

    pub fn terms(&self) -> &[(Scalar, OpWord)] {
        &self.0
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Self(v)
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self(self.0.iter().map(|(c, w)| (c * s, w.clone())).collect())
    }

    /// Operator product `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut v = Vec::new();
        for (c1, w1) in &self.0 {
            for (c2, w2) in &other.0 {
                v.push((c1 * c2, w1.then(w2)));
            }
        }
        Self(v)
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.compose(other).minus(&other.compose(self))
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::identity(), |acc, _| acc.compose(self))
    }

    /// Antilinear adjoint.
    pub fn star(&self) -> Self {
        Self(self.0.iter().map(|(c, w)| (c.conj(), w.star())).collect())
    }
}

impl fmt::Display for OpExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (idx, (c, w)) in self.0.iter().enumerate() {
            let body = if c.is_one() {
                w.to_string()
            } else if (-c).is_one() {
                format!("-{w}")
            } else {
                format!("({c}) {w}")
            };
            if idx == 0 {
                write!(f, "{body}")?;
            } else if let Some(rest) = body.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}

/// Binomial coefficient as a signed integer.
pub(crate) fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * (n - t) / (t + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        for text in ["H1", "X2+", "X1-", "U", "U^-1"] {
            assert_eq!(Symbol::parse(text).unwrap().to_string(), text);
        }
        assert!(Symbol::parse("X0+").is_err());
        assert!(Symbol::parse("Y1").is_err());
        let w = OpWord(vec![
            Symbol::exp(0, -1),
            Symbol::X(0, Sign::Plus),
            Symbol::exp(1, 2),
        ]);
        assert_eq!(w.to_string(), "L^(-H1) X1+ L^(2H2)");
    }

    #[test]
    fn star_reverses_and_conjugates() {
        let w = OpWord(vec![Symbol::exp(0, 1), Symbol::X(0, Sign::Plus)]);
        assert_eq!(
            w.star(),
            OpWord(vec![Symbol::X(0, Sign::Minus), Symbol::exp(0, -1)])
        );
        assert_eq!(w.star().star(), w);
    }

    #[test]
    fn simplification_merges_exponentials() {
        let w = OpWord(vec![
            Symbol::exp(1, 2),
            Symbol::exp(1, -2),
            Symbol::H(0),
            Symbol::u(),
            Symbol::u_inverse(),
        ]);
        assert_eq!(w.simplified(), OpWord(vec![Symbol::H(0)]));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(3, 0), BigInt::from(1));
        assert_eq!(binomial(3, 1), BigInt::from(3));
        assert_eq!(binomial(4, 2), BigInt::from(6));
    }
}
