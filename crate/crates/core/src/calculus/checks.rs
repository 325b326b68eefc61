use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::{BasisKey, DegreeVector, GradedPresentation};
use crate::check::{check_samples, mismatch, CheckEntry};
use crate::sampling::{enumerate_words, SampleSpec, Sampler};
use crate::scalars::Scalar;
use crate::symmetry::{OpExpr, Symbol};
use crate::twist::HopfStructure;

use super::{wedge_deformed, FormBasis, FormElement, TwistedFormAction};

fn subsets(n: usize, max_size: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for g in 0..n {
        let grown: Vec<Vec<usize>> = out
            .iter()
            .filter(|s| s.len() < max_size)
            .map(|s| {
                let mut t = s.clone();
                t.push(g);
                t
            })
            .collect();
        out.extend(grown);
    }
    out
}

/// `trials` tuples of random forms, each homogeneous in bidegree and form
/// degree, with coefficient words of length `≤ max_degree` and form degree
/// `≤ max_form_degree`.
pub fn sample_forms(
    p: &Arc<GradedPresentation>,
    spec: &SampleSpec,
    max_form_degree: usize,
    arity: usize,
) -> Vec<Vec<FormElement>> {
    let mut groups: BTreeMap<(DegreeVector, usize), Vec<FormBasis>> = BTreeMap::new();
    let mut keys = Vec::new();
    for w in enumerate_words(p.len(), spec.max_degree) {
        for d in subsets(p.len(), max_form_degree) {
            let key = FormBasis::new(w.clone(), d).expect("subsets are strictly increasing");
            groups
                .entry((key.degree(p), key.form_degree()))
                .or_default()
                .push(key.clone());
            keys.push(key);
        }
    }
    let mut s = Sampler::new(spec.seed);
    (0..spec.trials)
        .map(|_| {
            (0..arity)
                .map(|_| {
                    let first = keys[s.index(keys.len())].clone();
                    let same = &groups[&(first.degree(p), first.form_degree())];
                    let mut f = FormElement::term(p, first, s.scalar());
                    for _ in 0..s.int(0, 2) {
                        f.add_term(same[s.index(same.len())].clone(), s.scalar());
                    }
                    if f.is_zero() {
                        f = FormElement::term(p, same[0].clone(), Scalar::one());
                    }
                    f
                })
                .collect()
        })
        .collect()
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// `d² = 0`, `d ∘ ul = ul ∘ d`, the deformed wedge against the intrinsic
/// wedge of `Ω(A_λ)`, associativity, and the graded Leibniz rule for the
/// deformed wedge; `triples` are homogeneous forms over the source.
pub fn check_calculus(tw: &TwistedFormAction, triples: &[Vec<FormElement>]) -> Vec<CheckEntry> {
    let q = tw.quantization();
    vec![
        check_samples("calculus:d2", triples, |x| {
            let w = &x[0];
            let ul = tw.lift(w).map_err(err)?;
            let classical = w.exterior_d().exterior_d();
            let deformed = ul.exterior_d().exterior_d();
            Ok((!classical.is_zero())
                .then(|| format!("d(d({w})) = {classical}"))
                .or_else(|| (!deformed.is_zero()).then(|| format!("d(d({ul})) = {deformed}"))))
        }),
        check_samples("calculus:d-ul", triples, |x| {
            let w = &x[0];
            let lhs = tw.lift(w).map_err(err)?.exterior_d();
            let rhs = tw.lift(&w.exterior_d()).map_err(err)?;
            Ok(mismatch(&format!("on {w}"), &lhs, &rhs))
        }),
        check_samples("calculus:wedge-oracle", triples, |x| {
            let lhs = wedge_deformed(q, &x[0], &x[1]).map_err(err)?;
            let rhs = tw
                .lift(&x[0])
                .map_err(err)?
                .wedge(&tw.lift(&x[1]).map_err(err)?)
                .map_err(err)?;
            Ok(mismatch(&format!("on ({})^({})", x[0], x[1]), &lhs, &rhs))
        }),
        check_samples("calculus:wedge-assoc", triples, |x| {
            let [a, b, c] = [&x[0], &x[1], &x[2]].map(|f| tw.lift(f));
            let (a, b, c) = (a.map_err(err)?, b.map_err(err)?, c.map_err(err)?);
            let lhs = a.wedge(&b).and_then(|ab| ab.wedge(&c)).map_err(err)?;
            let rhs = b.wedge(&c).and_then(|bc| a.wedge(&bc)).map_err(err)?;
            Ok(mismatch(&format!("on {a}, {b}, {c}"), &lhs, &rhs))
        }),
        check_samples("calculus:leibniz", triples, |x| {
            let (w, r) = (&x[0], &x[1]);
            let k = w.form_degree().ok_or("sample without a form degree")?;
            let sign = if k % 2 == 0 {
                Scalar::one()
            } else {
                -Scalar::one()
            };
            let lhs = wedge_deformed(q, w, r).map_err(err)?.exterior_d();
            let first = wedge_deformed(q, &w.exterior_d(), r).map_err(err)?;
            let second = wedge_deformed(q, w, &r.exterior_d())
                .map_err(err)?
                .scale(&sign);
            Ok(mismatch(
                &format!("on ul({w}), ul({r})"),
                &lhs,
                &(&first + &second),
            ))
        }),
    ]
}

/// Equivariance `T ▷ d ul ω = d(T ▷ ul ω)` and the module-algebra property
/// `T ▷ (ul ω ∧ ul ρ) = Σ (T₍₁₎ ▷ ul ω) ∧ (T₍₂₎ ▷ ul ρ)` for each symbol.
pub fn check_form_action(
    tw: &TwistedFormAction,
    hopf: &HopfStructure,
    symbols: &[Symbol],
    pairs: &[Vec<FormElement>],
) -> Vec<CheckEntry> {
    let mut entries = Vec::new();
    for s in symbols {
        let t = OpExpr::symbol(s.clone());
        entries.push(check_samples(
            format!("calculus:equivariance:{s}"),
            pairs,
            |x| {
                let ul = tw.lift(&x[0]).map_err(err)?;
                let lhs = tw.act(&t, &ul.exterior_d()).map_err(err)?;
                let rhs = tw.act(&t, &ul).map_err(err)?.exterior_d();
                Ok(mismatch(&format!("{s} on d({ul})"), &lhs, &rhs))
            },
        ));
        entries.push(check_samples(format!("calculus:module:{s}"), pairs, |x| {
            let (a, b) = (tw.lift(&x[0]).map_err(err)?, tw.lift(&x[1]).map_err(err)?);
            let lhs = tw.act(&t, &a.wedge(&b).map_err(err)?).map_err(err)?;
            let rhs = tw.act_on_wedge(hopf, &t, &a, &b).map_err(err)?;
            Ok(mismatch(&format!("{s} on ({a})^({b})"), &lhs, &rhs))
        }));
    }
    entries
}
