use crate::algebra::Element;
use crate::check::{check_samples, mismatch, CheckEntry};
use crate::scalars::{form_identity_check, DegreeForm, Scalar};
use crate::symmetry::{CartanData, GeneratorAction, OpExpr, Sign, Symbol};

use super::psi::PAIR_VARS;
use super::{tensor, Coproduct, HopfStructure, Tensor, TensorOp, Twist, TwistedAction};

/// `H₁..H_r` and, if the action defines them, every `Xᵢ^±`.
pub fn generator_symbols(cd: &CartanData, with_x: bool) -> Vec<Symbol> {
    let mut out: Vec<Symbol> = (0..cd.rank()).map(Symbol::H).collect();
    if with_x {
        for i in 0..cd.rank() {
            for sign in Sign::both() {
                out.push(Symbol::X(i, sign));
            }
        }
    }
    out
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Cocycle, counit and unitarity of the twist, all as exact form identities.
pub fn check_twist(twist: &Twist) -> Vec<CheckEntry> {
    let (l, r) = twist.cocycle_sides();
    let cocycle = if twist.check_cocycle() {
        CheckEntry::pass("twist:cocycle")
    } else {
        CheckEntry::fail("twist:cocycle", format!("{l} ≠ {r}"))
    };
    let counit = if twist.check_counit() {
        CheckEntry::pass("twist:counit")
    } else {
        CheckEntry::fail(
            "twist:counit",
            format!("exponent {} survives a zero slot", twist.exponent()),
        )
    };
    let unitary = if twist.check_unitary() {
        CheckEntry::pass("twist:unitary")
    } else {
        CheckEntry::fail("twist:unitary", format!("exponent {}", twist.exponent()))
    };
    vec![cocycle, counit, unitary]
}

/// Hopf axioms of the twisted coproduct as operator identities on samples:
/// the coproduct equals `ΨΔ₀Ψ⁻¹`, coassociativity on triples, counit and
/// antipode axioms, `S = U S₀ U⁻¹` and `U⁻¹ = U*`.
pub fn check_hopf_axioms(
    hopf: &HopfStructure,
    action: &GeneratorAction,
    symbols: &[Symbol],
    triples: &[Vec<Element>],
) -> Vec<CheckEntry> {
    let classical = HopfStructure::classical(hopf.cartan().clone());
    let psi = Twist::cartan();
    let act =
        |op: &TensorOp, t: &Tensor| -> Result<Tensor, String> { op.act(action, t).map_err(err) };
    let mut entries = Vec::new();
    for s in symbols {
        let e = OpExpr::symbol(s.clone());
        let built = (|| {
            let delta = hopf.coproduct(&e)?;
            let left = delta.expand_slot(0, |w| hopf.coproduct_word(w))?;
            let right = delta.expand_slot(1, |w| hopf.coproduct_word(w))?;
            let eps_left = delta.contract_slot(0, HopfStructure::counit_word);
            let eps_right = delta.contract_slot(1, HopfStructure::counit_word);
            let s_left = delta.collapse(|k, w| {
                if k == 0 {
                    hopf.antipode_word(w)
                } else {
                    Ok(OpExpr::word(w.clone()))
                }
            })?;
            let s_right = delta.collapse(|k, w| {
                if k == 1 {
                    hopf.antipode_word(w)
                } else {
                    Ok(OpExpr::word(w.clone()))
                }
            })?;
            let antipode = hopf.antipode(&e)?;
            let via_u = hopf.antipode_via_u(&e)?;
            let delta0 = classical.coproduct(&e)?;
            Ok::<_, super::TwistError>((
                delta, delta0, left, right, eps_left, eps_right, s_left, s_right, antipode, via_u,
            ))
        })();
        let (delta, delta0, left, right, eps_left, eps_right, s_left, s_right, antipode, via_u) =
            match built {
                Ok(parts) => parts,
                Err(e) => {
                    entries.push(CheckEntry::error(format!("hopf:{s}"), e.to_string()));
                    continue;
                }
            };
        let eps = OpExpr::identity().scale(&HopfStructure::counit(&e));
        let t = OpExpr::symbol(s.clone());
        entries.push(check_samples(
            format!("hopf:conjugation:{s}"),
            triples,
            |x| {
                let ab = tensor(&x[..2]).map_err(err)?;
                let lhs = act(&delta, &ab)?;
                let inner = psi.inverse().apply(&ab).map_err(err)?;
                let rhs = psi.apply(&act(&delta0, &inner)?).map_err(err)?;
                Ok(mismatch(&format!("on {ab}"), &lhs, &rhs))
            },
        ));
        entries.push(check_samples(format!("hopf:coassoc:{s}"), triples, |x| {
            let abc = tensor(x).map_err(err)?;
            Ok(mismatch(
                &format!("on {abc}"),
                &act(&left, &abc)?,
                &act(&right, &abc)?,
            ))
        }));
        entries.push(check_samples(format!("hopf:counit:{s}"), triples, |x| {
            let a = &x[0];
            let plain = action.act_expr(&t, a).map_err(err)?;
            for op in [&eps_left, &eps_right] {
                let single = tensor(std::slice::from_ref(a)).map_err(err)?;
                let got = act(op, &single)?;
                let want = tensor(&[plain.clone()]).map_err(err)?;
                if let Some(m) = mismatch(&format!("on {a}"), &got, &want) {
                    return Ok(Some(m));
                }
            }
            Ok(None)
        }));
        entries.push(check_samples(format!("hopf:antipode:{s}"), triples, |x| {
            let a = &x[0];
            let want = action.act_expr(&eps, a).map_err(err)?;
            for op in [&s_left, &s_right] {
                let got = action.act_expr(op, a).map_err(err)?;
                if let Some(m) = mismatch(&format!("on {a}"), &got, &want) {
                    return Ok(Some(m));
                }
            }
            Ok(None)
        }));
        entries.push(check_samples(
            format!("hopf:antipode-u:{s}"),
            triples,
            |x| {
                let a = &x[0];
                let lhs = action.act_expr(&antipode, a).map_err(err)?;
                let rhs = action.act_expr(&via_u, a).map_err(err)?;
                Ok(mismatch(&format!("on {a}"), &lhs, &rhs))
            },
        ));
    }
    let u = OpExpr::symbol(Symbol::u());
    let u_inv = OpExpr::symbol(Symbol::u_inverse());
    entries.push(check_samples("hopf:u-inverse", triples, |x| {
        let a = &x[0];
        let inv = action.act_expr(&u_inv, a).map_err(err)?;
        let star = action.act_expr(&u.star(), a).map_err(err)?;
        let back = action.act_expr(&u.compose(&u_inv), a).map_err(err)?;
        Ok(mismatch(&format!("U^-1 vs U* on {a}"), &inv, &star)
            .or_else(|| mismatch(&format!("U U^-1 on {a}"), &back, a)))
    }));
    entries
}

/// `T ▷ (ul a · ul b) = Σ (T₍₁₎ ▷ ul a)·(T₍₂₎ ▷ ul b)` on sampled pairs.
/// With the classical coproduct this is expected to fail on `A_λ`; those
/// entries are labelled `module-classical:`.
pub fn check_module_algebra(
    twisted: &TwistedAction,
    hopf: &HopfStructure,
    symbols: &[Symbol],
    pairs: &[Vec<Element>],
) -> Vec<CheckEntry> {
    let prefix = match hopf.kind() {
        Coproduct::Twisted => "module",
        Coproduct::Classical => "module-classical",
    };
    symbols
        .iter()
        .map(|s| {
            let t = OpExpr::symbol(s.clone());
            check_samples(format!("{prefix}:{s}"), pairs, |x| {
                let a = twisted.lift(&x[0]).map_err(err)?;
                let b = twisted.lift(&x[1]).map_err(err)?;
                let ab = a.multiply(&b).map_err(err)?;
                let lhs = twisted.act_expr(&t, &ab).map_err(err)?;
                let rhs = twisted.act_on_product(hopf, &t, &a, &b).map_err(err)?;
                Ok(mismatch(&format!("{s} on ({a})*({b})"), &lhs, &rhs))
            })
        })
        .collect()
}

/// Star compatibility. First the classical action: `t ▷ a* = ((S₀t)* ▷ a)*`;
/// then on `A_λ`: `T ▷ (ul a)* = ((S T)* ▷ ul a)*`; finally the deformed
/// involution `(ul a)* = ul((U⁻¹ ▷ a)*)` with `U = λ^{H₁H₂}`.
pub fn check_star_compat(
    twisted: &TwistedAction,
    hopf: &HopfStructure,
    symbols: &[Symbol],
    singles: &[Vec<Element>],
) -> Vec<CheckEntry> {
    let q = twisted.quantization();
    if !q.source().has_involution() {
        return vec![CheckEntry::error(
            "star",
            format!("{} has no involution", q.source().name()),
        )];
    }
    let action = twisted.classical();
    let classical = HopfStructure::classical(hopf.cartan().clone());
    let mut entries = Vec::new();
    for s in symbols {
        let t = OpExpr::symbol(s.clone());
        let pieces = classical
            .antipode(&t)
            .and_then(|s0| Ok((s0.star(), hopf.antipode(&t)?.star())));
        let (s0_star, s_star) = match pieces {
            Ok(p) => p,
            Err(e) => {
                entries.push(CheckEntry::error(format!("star:{s}"), e.to_string()));
                continue;
            }
        };
        entries.push(check_samples(format!("star:classical:{s}"), singles, |x| {
            let a = &x[0];
            let lhs = action
                .act_expr(&t, &a.involution().map_err(err)?)
                .map_err(err)?;
            let rhs = action
                .act_expr(&s0_star, a)
                .map_err(err)?
                .involution()
                .map_err(err)?;
            Ok(mismatch(&format!("on {a}"), &lhs, &rhs))
        }));
        entries.push(check_samples(format!("star:{s}"), singles, |x| {
            let a = twisted.lift(&x[0]).map_err(err)?;
            let lhs = twisted
                .act_expr(&t, &q.star_involution(&a).map_err(err)?)
                .map_err(err)?;
            let rhs = q
                .star_involution(&twisted.act_expr(&s_star, &a).map_err(err)?)
                .map_err(err)?;
            Ok(mismatch(&format!("on {a}"), &lhs, &rhs))
        }));
    }
    let u_inv = OpExpr::symbol(Symbol::u_inverse());
    entries.push(check_samples("star:star2-u", singles, |x| {
        let a = &x[0];
        let lhs = q.star_involution(&q.lift(a).map_err(err)?).map_err(err)?;
        let rhs = q
            .lift(
                &action
                    .act_expr(&u_inv, a)
                    .map_err(err)?
                    .involution()
                    .map_err(err)?,
            )
            .map_err(err)?;
        Ok(mismatch(&format!("on {a}"), &lhs, &rhs))
    }));
    entries
}

/// The exponent `p₂q₁ − p₁q₂` of `λ^{H₂⊗H₁ − H₁⊗H₂}`.
pub fn printed_r_exponent() -> DegreeForm {
    let v = |n| DegreeForm::var(&PAIR_VARS, n).expect("pair variable");
    &(&v("p2") * &v("q1")) - &(&v("p1") * &v("q2"))
}

/// Triangularity `R₂₁ = R⁻¹` (exact), the identification of
/// `λ^{H₂⊗H₁ − H₁⊗H₂}` with `R₂₁`, and `R·Δ(T) = Δᵒᵖ(T)·R` on samples.
pub fn check_r_matrix(
    twist: &Twist,
    hopf: &HopfStructure,
    action: &GeneratorAction,
    symbols: &[Symbol],
    pairs: &[Vec<Element>],
) -> Vec<CheckEntry> {
    let r = twist.r_matrix();
    let r21 = r.flipped();
    let form_entry = |id: &str, f: &DegreeForm, g: &DegreeForm| match form_identity_check(f, g) {
        Ok(true) => CheckEntry::pass(id),
        Ok(false) => CheckEntry::fail(id, format!("{f} ≠ {g}")),
        Err(e) => CheckEntry::error(id, e.to_string()),
    };
    let mut entries = vec![
        form_entry("r:triangular", r21.exponent(), r.inverse().exponent()),
        form_entry("r:printed-form", &printed_r_exponent(), r21.exponent()),
    ];
    for s in symbols {
        let delta = match hopf.coproduct(&OpExpr::symbol(s.clone())) {
            Ok(d) => d,
            Err(e) => {
                entries.push(CheckEntry::error(
                    format!("r:intertwine:{s}"),
                    e.to_string(),
                ));
                continue;
            }
        };
        let op = delta.flip();
        entries.push(check_samples(format!("r:intertwine:{s}"), pairs, |x| {
            let ab = tensor(&x[..2]).map_err(err)?;
            let lhs = r
                .apply(&delta.act(action, &ab).map_err(err)?)
                .map_err(err)?;
            let rhs = op.act(action, &r.apply(&ab).map_err(err)?).map_err(err)?;
            Ok(mismatch(&format!("on {ab}"), &lhs, &rhs))
        }));
    }
    entries
}

/// `Ψ⁻¹ ▷ (a⊗b)` multiplied out: the deformed product from the twist alone.
pub fn twist_product(
    twist: &Twist,
    a: &Element,
    b: &Element,
) -> Result<Element, super::TwistError> {
    let t = twist.inverse().apply(&tensor(&[a.clone(), b.clone()])?)?;
    let p = a.presentation();
    let mut out = Element::zero(p);
    for (key, c) in t.terms() {
        let l = Element::term(p, key.0[0].clone(), c.clone());
        let r = Element::term(p, key.0[1].clone(), Scalar::one());
        out = &out + &l.multiply(&r)?;
    }
    Ok(out)
}
