use rayon::prelude::*;

use crate::algebra::{Element, Word};
use crate::check::CheckEntry;
use crate::sampling::enumerate_words;
use crate::scalars::Scalar;

use super::symbols::binomial;
use super::{GeneratorAction, OpExpr, Sign, Symbol};

/// First basis word (in enumeration order) on which `lhs` and `rhs` act
/// differently, rendered as a counterexample.
pub fn operator_counterexample(
    action: &GeneratorAction,
    lhs: &OpExpr,
    rhs: &OpExpr,
    words: &[Word],
) -> Option<String> {
    let p = action.presentation();
    words.par_iter().find_map_first(|w| {
        let a = Element::term(p, w.clone(), Scalar::one());
        match (action.act_expr(lhs, &a), action.act_expr(rhs, &a)) {
            (Ok(l), Ok(r)) if l == r => None,
            (Ok(l), Ok(r)) => Some(format!("on {a}: lhs = {l}, rhs = {r}")),
            (Err(e), _) | (_, Err(e)) => Some(format!("on {a}: {e}")),
        }
    })
}

fn sym(s: Symbol) -> OpExpr {
    OpExpr::symbol(s)
}

/// `[hᵢ,hⱼ] = 0`, `[hᵢ,xⱼ^±] = ±a_{ij}xⱼ^±`, `[xᵢ⁺,xⱼ⁻] = δ_{ij}hᵢ` as operator
/// identities on every word of total degree `≤ cutoff`.
///
/// When the action defines no `xᵢ^±` (an abelian torus symmetry) only the
/// Cartan relations are checked.
pub fn check_lie_relations(action: &GeneratorAction, cutoff: u32) -> Vec<CheckEntry> {
    let cd = action.cartan();
    let r = cd.rank();
    let words = enumerate_words(action.presentation().len(), cutoff);
    let mut entries = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            let lhs = sym(Symbol::H(i)).commutator(&sym(Symbol::H(j)));
            let id = format!("lie:[H{},H{}]=0", i + 1, j + 1);
            entries.push(CheckEntry::from_counterexample(
                id,
                operator_counterexample(action, &lhs, &OpExpr::zero(), &words),
            ));
        }
    }
    if !action.has_x() {
        return entries;
    }
    for i in 0..r {
        for j in 0..r {
            for sign in Sign::both() {
                let x = sym(Symbol::X(j, sign));
                let lhs = sym(Symbol::H(i)).commutator(&x);
                let rhs = x.scale(&Scalar::from_integer(sign.as_i64() * cd.entry(i, j)));
                let id = format!("lie:[H{},{}]", i + 1, Symbol::X(j, sign));
                entries.push(CheckEntry::from_counterexample(
                    id,
                    operator_counterexample(action, &lhs, &rhs, &words),
                ));
            }
        }
    }
    for i in 0..r {
        for j in 0..r {
            let lhs = sym(Symbol::X(i, Sign::Plus)).commutator(&sym(Symbol::X(j, Sign::Minus)));
            let rhs = if i == j {
                sym(Symbol::H(i))
            } else {
                OpExpr::zero()
            };
            let id = format!("lie:[X{}+,X{}-]", i + 1, j + 1);
            entries.push(CheckEntry::from_counterexample(
                id,
                operator_counterexample(action, &lhs, &rhs, &words),
            ));
        }
    }
    entries
}

/// `Σ_k (±1)^k C(n,k) (xᵢ)^k xⱼ (xᵢ)^{n−k}` with `n = 1 − a_{ij}`; the
/// standard relation uses the alternating sign.
pub fn serre_expr(
    action: &GeneratorAction,
    i: usize,
    j: usize,
    sign: Sign,
    alternating: bool,
) -> OpExpr {
    let n = (1 - action.cartan().entry(i, j)) as u32;
    let xi = sym(Symbol::X(i, sign));
    let xj = sym(Symbol::X(j, sign));
    let mut total = OpExpr::zero();
    for k in 0..=n {
        let mut c = binomial(n, k);
        if alternating && k % 2 == 1 {
            c = -c;
        }
        let term = xi.pow(k).compose(&xj).compose(&xi.pow(n - k));
        total = total.plus(&term.scale(&Scalar::from_integer(c)));
    }
    total
}

/// Signed Serre relations for all `i ≠ j` and both signs on words of total
/// degree `≤ cutoff`.
pub fn check_serre(action: &GeneratorAction, cutoff: u32) -> Vec<CheckEntry> {
    let r = action.cartan().rank();
    let words = enumerate_words(action.presentation().len(), cutoff);
    let mut entries = Vec::new();
    for i in 0..r {
        for j in 0..r {
            if i == j {
                continue;
            }
            for sign in Sign::both() {
                let rel = serre_expr(action, i, j, sign, true);
                let id = format!(
                    "serre:({},{}){}",
                    i + 1,
                    j + 1,
                    if sign == Sign::Plus { "+" } else { "-" }
                );
                entries.push(CheckEntry::from_counterexample(
                    id,
                    operator_counterexample(action, &rel, &OpExpr::zero(), &words),
                ));
            }
        }
    }
    entries
}
