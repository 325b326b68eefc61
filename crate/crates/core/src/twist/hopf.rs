use crate::scalars::Scalar;
use crate::symmetry::{CartanData, OpExpr, OpWord, Sign, Symbol};

use super::{TensorOp, TwistError};

/// Which coproduct the symmetry carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coproduct {
    /// Primitive `Δx = x⊗1 + 1⊗x`.
    Classical,
    /// `Δ_Ψ = Ψ Δ Ψ⁻¹` for the Cartan twist `Ψ = λ^{−H₁⊗H₂}`.
    Twisted,
}

/// Coproduct, counit and antipode of `U(g)` or its Cartan twist, on
/// Chevalley symbols and Cartan exponentials.
#[derive(Clone, Debug)]
pub struct HopfStructure {
    cartan: CartanData,
    kind: Coproduct,
}

fn w(symbols: Vec<Symbol>) -> OpWord {
    OpWord(symbols).simplified()
}

impl HopfStructure {
    pub fn new(cartan: CartanData, kind: Coproduct) -> Self {
        Self { cartan, kind }
    }

    pub fn twisted(cartan: CartanData) -> Self {
        Self::new(cartan, Coproduct::Twisted)
    }

    pub fn classical(cartan: CartanData) -> Self {
        Self::new(cartan, Coproduct::Classical)
    }

    pub fn cartan(&self) -> &CartanData {
        &self.cartan
    }

    pub fn kind(&self) -> Coproduct {
        self.kind
    }

    fn check_index(&self, i: usize) -> Result<(), TwistError> {
        if i < self.cartan.rank() {
            Ok(())
        } else {
            Err(TwistError::Unsupported(format!(
                "index {} exceeds the rank",
                i + 1
            )))
        }
    }

    fn slots(&self, h: usize) -> Result<usize, TwistError> {
        self.check_index(h)?;
        self.cartan
            .slot_of(h)
            .ok_or_else(|| TwistError::Unsupported(format!("λ^(kH{}) outside the grading", h + 1)))
    }

    /// `(λ^{∓α H₂}, λ^{∓β H₁})` tails of the twisted `Xᵢ^±`.
    fn tails(&self, i: usize, sign: Sign) -> (Symbol, Symbol) {
        let (h1, h2) = self.cartan.picks();
        let s = -sign.as_i64();
        (
            Symbol::exp(h2, s * self.cartan.alpha(i)),
            Symbol::exp(h1, s * self.cartan.beta(i)),
        )
    }

    /// `Δ(s)`:
    /// `Hᵢ ↦ Hᵢ⊗1 + 1⊗Hᵢ`,
    /// `Xᵢ^± ↦ Xᵢ^± ⊗ λ^{∓αᵢH₂} + λ^{∓βᵢH₁} ⊗ Xᵢ^±` (twisted),
    /// `λ^{kH} ↦ λ^{kH} ⊗ λ^{kH}`.
    pub fn coproduct_symbol(&self, s: &Symbol) -> Result<TensorOp, TwistError> {
        let one = OpWord::identity;
        let single = |s: &Symbol| OpWord::single(s.clone());
        match s {
            Symbol::H(i) => {
                self.check_index(*i)?;
                TensorOp::elementary(Scalar::one(), vec![single(s), one()])
                    .plus(&TensorOp::elementary(Scalar::one(), vec![one(), single(s)]))
            }
            Symbol::X(i, sign) => {
                self.check_index(*i)?;
                let (right, left) = match self.kind {
                    Coproduct::Classical => (one(), one()),
                    Coproduct::Twisted => {
                        let (r, l) = self.tails(*i, *sign);
                        (w(vec![r]), w(vec![l]))
                    }
                };
                TensorOp::elementary(Scalar::one(), vec![single(s), right])
                    .plus(&TensorOp::elementary(Scalar::one(), vec![left, single(s)]))
            }
            Symbol::Exp { h, .. } => {
                self.slots(*h)?;
                Ok(TensorOp::elementary(
                    Scalar::one(),
                    vec![single(s), single(s)],
                ))
            }
            Symbol::QuadExp(_) => Err(TwistError::Unsupported(format!("coproduct of {s}"))),
        }
    }

    /// `Δ` extended multiplicatively to words.
    pub fn coproduct_word(&self, word: &OpWord) -> Result<TensorOp, TwistError> {
        let mut out = TensorOp::identity(2);
        for s in word.symbols() {
            out = out.compose(&self.coproduct_symbol(s)?)?;
        }
        Ok(out)
    }

    pub fn coproduct(&self, e: &OpExpr) -> Result<TensorOp, TwistError> {
        let mut out = TensorOp::zero(2);
        for (c, word) in e.terms() {
            out = out.plus(&self.coproduct_word(word)?.scale(c))?;
        }
        Ok(out)
    }

    /// `ε(Hᵢ) = ε(Xᵢ^±) = 0`, `ε(λ^{kH}) = ε(U) = 1`.
    pub fn counit_word(word: &OpWord) -> Scalar {
        let vanishes = word
            .symbols()
            .iter()
            .any(|s| matches!(s, Symbol::H(_) | Symbol::X(..)));
        if vanishes {
            Scalar::zero()
        } else {
            Scalar::one()
        }
    }

    pub fn counit(e: &OpExpr) -> Scalar {
        e.terms().iter().fold(Scalar::zero(), |acc, (c, w)| {
            &acc + &(c * &Self::counit_word(w))
        })
    }

    /// `S Hᵢ = −Hᵢ`, `S Xᵢ^± = −λ^{±βᵢH₁} Xᵢ^± λ^{±αᵢH₂}` (twisted) or
    /// `−Xᵢ^±` (classical), `S λ^{kH} = λ^{−kH}`.
    pub fn antipode_symbol(&self, s: &Symbol) -> Result<OpExpr, TwistError> {
        let minus = -Scalar::one();
        match s {
            Symbol::H(i) => {
                self.check_index(*i)?;
                Ok(OpExpr::symbol(s.clone()).scale(&minus))
            }
            Symbol::X(i, sign) => {
                self.check_index(*i)?;
                let word = match self.kind {
                    Coproduct::Classical => OpWord::single(s.clone()),
                    Coproduct::Twisted => {
                        let (right, left) = self.tails(*i, *sign);
                        w(vec![left.star(), s.clone(), right.star()])
                    }
                };
                Ok(OpExpr::word(word).scale(&minus))
            }
            Symbol::Exp { h, k } => {
                self.slots(*h)?;
                Ok(OpExpr::symbol(Symbol::exp(*h, -k)))
            }
            Symbol::QuadExp(_) => Err(TwistError::Unsupported(format!("antipode of {s}"))),
        }
    }

    /// `S` extended as an anti-homomorphism.
    pub fn antipode_word(&self, word: &OpWord) -> Result<OpExpr, TwistError> {
        let mut out = OpExpr::identity();
        for s in word.symbols().iter().rev() {
            out = out.compose(&self.antipode_symbol(s)?);
        }
        Ok(out)
    }

    pub fn antipode(&self, e: &OpExpr) -> Result<OpExpr, TwistError> {
        let mut out = OpExpr::zero();
        for (c, word) in e.terms() {
            out = out.plus(&self.antipode_word(word)?.scale(c));
        }
        Ok(out)
    }

    /// `U·S₀(t)·U⁻¹` with `S₀` the classical antipode and `U = λ^{H₁H₂}`.
    pub fn antipode_via_u(&self, e: &OpExpr) -> Result<OpExpr, TwistError> {
        let classical = HopfStructure::classical(self.cartan.clone()).antipode(e)?;
        Ok(OpExpr::symbol(Symbol::u())
            .compose(&classical)
            .compose(&OpExpr::symbol(Symbol::u_inverse())))
    }
}
