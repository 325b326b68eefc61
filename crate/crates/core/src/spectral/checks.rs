use std::collections::BTreeMap;

use nalgebra::Matrix2;
use num::BigInt;
use serde::Serialize;

use crate::algebra::{BasisKey, Element};
use crate::check::CheckEntry;
use crate::sampling::SampleSpec;
use crate::scalars::Scalar;
use crate::symmetry::{GeneratorAction, OpWord, Symbol};
use crate::twist::{HopfStructure, TwistedAction};

use super::{SpectralError, SpectralModel, C64};

/// Residual bound for floating-point identities.
pub const TOLERANCE: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NormRecord {
    pub operator: String,
    pub cutoff: i64,
    pub deformed: f64,
    pub undeformed: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumSummary {
    pub dimension: usize,
    pub distinct: usize,
    /// Smallest distinct `|eigenvalue|`s with their multiplicities.
    pub lowest: Vec<(f64, usize)>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralSummary {
    pub cutoff: i64,
    pub theta: String,
    pub commutator_norms: Vec<NormRecord>,
    pub spectrum: SpectrumSummary,
}

fn within(id: impl Into<String>, residual: f64, bound: f64, what: &str) -> CheckEntry {
    let entry = if residual <= bound {
        CheckEntry::pass(id)
    } else {
        CheckEntry::fail(
            id,
            format!("{what}: residual {residual:e} exceeds {bound:e}"),
        )
    };
    entry.with_residual(residual)
}

fn error_entry(id: &str, e: SpectralError) -> CheckEntry {
    CheckEntry::error(id, e.to_string())
}

/// `[D, hᵢ] = 0` exactly, and the control `‖[D, ul g]‖ ≥ 1` for the first
/// generator.
pub fn check_isometry(model: &SpectralModel) -> Vec<CheckEntry> {
    let d = model.dirac();
    let mut entries: Vec<CheckEntry> = (0..2)
        .map(|slot| {
            let r = d.commutator(&model.cartan(slot)).max_abs();
            let id = format!("spectral:isometry:h{}", slot + 1);
            let entry = if r == 0.0 {
                CheckEntry::pass(id)
            } else {
                CheckEntry::fail(id, format!("[D,h] has entry {r:e}"))
            };
            entry.with_residual(r)
        })
        .collect();
    let p = model.quantization().target();
    if !p.is_empty() {
        let name = &p.generators()[0].name;
        let id = format!("spectral:control:[D,{name}]");
        entries.push(match model.rep_generator(0) {
            Ok(g) => {
                let norm = d.commutator(&g).norm();
                let e = if norm >= 1.0 - TOLERANCE {
                    CheckEntry::pass(id)
                } else {
                    CheckEntry::fail(id, format!("‖[D,{name}]‖ = {norm}, expected ≥ 1"))
                };
                e.with_residual(norm)
            }
            Err(e) => error_entry(&id, e),
        });
    }
    entries
}

/// `±√(n²+m²)` for every mode in the window, sorted.
pub fn dirac_spectrum_closed_form(cutoff: i64) -> Vec<f64> {
    let mut out = Vec::new();
    for n in -cutoff..=cutoff {
        for m in -cutoff..=cutoff {
            let r = ((n * n + m * m) as f64).sqrt();
            out.push(-r);
            out.push(r);
        }
    }
    out.sort_by(f64::total_cmp);
    out
}

/// Eigenvalues of `D` from its 2×2 blocks.
pub fn dirac_spectrum(model: &SpectralModel) -> Vec<f64> {
    let d = model.dirac();
    let mut out = Vec::with_capacity(model.dim());
    for j in (0..model.dim()).step_by(2) {
        let entry = |col: usize, row: usize| {
            d.column(col)
                .iter()
                .find(|e| e.0 == row)
                .map(|e| e.1)
                .unwrap_or_default()
        };
        let block = Matrix2::new(
            entry(j, j),
            entry(j + 1, j),
            entry(j, j + 1),
            entry(j + 1, j + 1),
        );
        out.extend(block.symmetric_eigenvalues().iter());
    }
    out.sort_by(f64::total_cmp);
    out
}

fn summarize(spectrum: &[f64]) -> SpectrumSummary {
    let mut distinct: Vec<(f64, usize)> = Vec::new();
    let mut abs: Vec<f64> = spectrum.iter().map(|x| x.abs()).collect();
    abs.sort_by(f64::total_cmp);
    for x in abs {
        match distinct.last_mut() {
            Some((y, k)) if (x - *y).abs() <= 1e-9 => *k += 1,
            _ => distinct.push((x, 1)),
        }
    }
    let count = distinct.len();
    distinct.truncate(6);
    SpectrumSummary {
        dimension: spectrum.len(),
        distinct: count,
        lowest: distinct,
    }
}

/// `‖[D, ul g]‖` for every generator and the unit, deformed against
/// undeformed and across `cutoffs`; `D`'s spectrum deformed against
/// undeformed and against the closed form.
pub fn check_boundedness_and_isospectrality(
    model: &SpectralModel,
    cutoffs: &[i64],
) -> (Vec<CheckEntry>, SpectralSummary) {
    let target = model.quantization().target().clone();
    let mut elements: Vec<(String, Element)> = vec![("1".to_string(), Element::unit(&target))];
    for (g, gen) in target.generators().iter().enumerate() {
        elements.push((gen.name.clone(), Element::generator(&target, g)));
    }
    let mut entries = Vec::new();
    let mut records = Vec::new();
    for (name, a) in &elements {
        let id = format!("spectral:norm:[D,{name}]");
        let mut values = Vec::new();
        let mut failure = None;
        for &n in cutoffs {
            let measured = model.with_cutoff(n).and_then(|m| {
                let flat = m.undeformed();
                let def = m.dirac().commutator(&m.rep_deformed(a)?).norm();
                let und =
                    flat.dirac()
                        .commutator(&flat.rep_deformed(
                            &flat.quantization().lift(&m.quantization().unlift(a)?)?,
                        )?)
                        .norm();
                Ok((def, und))
            });
            match measured {
                Ok((def, und)) => {
                    records.push(NormRecord {
                        operator: format!("[D,{name}]"),
                        cutoff: n,
                        deformed: def,
                        undeformed: und,
                    });
                    values.push(def);
                    values.push(und);
                }
                Err(e) => failure = Some(e),
            }
        }
        entries.push(match failure {
            Some(e) => error_entry(&id, e),
            None => {
                let lo = values.iter().cloned().fold(f64::INFINITY, f64::min);
                let hi = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
                within(id, hi - lo, TOLERANCE, "norm varies with θ or the cutoff")
            }
        });
    }
    let deformed = dirac_spectrum(model);
    let undeformed = dirac_spectrum(&model.undeformed());
    let closed = dirac_spectrum_closed_form(model.cutoff());
    let gap = deformed
        .iter()
        .zip(&undeformed)
        .chain(deformed.iter().zip(&closed))
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    let same_len = deformed.len() == undeformed.len() && deformed.len() == closed.len();
    entries.push(if same_len {
        within("spectral:isospectral", gap, TOLERANCE, "spectra differ")
    } else {
        CheckEntry::fail("spectral:isospectral", "spectra have different sizes")
    });
    let summary = SpectralSummary {
        cutoff: model.cutoff(),
        theta: model.theta().to_string(),
        commutator_norms: records,
        spectrum: summarize(&deformed),
    };
    (entries, summary)
}

/// `rep(gᵢ)rep(gⱼ) = λ^{c_ij} rep(gⱼ)rep(gᵢ)` on the valid window.
pub fn check_relations(model: &SpectralModel) -> CheckEntry {
    let id = "spectral:relations";
    let p = model.quantization().target().clone();
    let gens = match (0..p.len())
        .map(|g| model.rep_generator(g))
        .collect::<Result<Vec<_>, _>>()
    {
        Ok(g) => g,
        Err(e) => return error_entry(id, e),
    };
    let mut worst = 0.0f64;
    for i in 0..p.len() {
        for j in 0..i {
            let c = model.eval(&Scalar::lambda_pow(p.commutation(i, j).clone()));
            let lhs = gens[i].mul(&gens[j]);
            let rhs = gens[j].mul(&gens[i]).scale(c);
            worst = worst.max(lhs.residual(&rhs));
        }
    }
    within(id, worst, TOLERANCE, "λ-commutation relation")
}

/// Homomorphism, involution and exact-vs-float checks on random elements of
/// `A_λ` with words of length `≤ spec.max_degree`.
pub fn check_representation(model: &SpectralModel, spec: &SampleSpec) -> Vec<CheckEntry> {
    let q = model.quantization();
    let samples = spec.elements(q.source(), 2);
    let mut hom = 0.0f64;
    let mut inv = 0.0f64;
    let mut float = 0.0f64;
    let mut run = || -> Result<(), SpectralError> {
        for pair in &samples {
            let a = q.lift(&pair[0])?;
            let b = q.lift(&pair[1])?;
            let (ra, rb) = (model.rep_deformed(&a)?, model.rep_deformed(&b)?);
            let rab = model.rep_deformed(&a.multiply(&b)?)?;
            hom = hom.max(rab.residual(&ra.mul(&rb)));
            if q.source().has_involution() {
                let star = model.rep_deformed(&q.star_involution(&a)?)?;
                inv = inv.max(star.adjoint_residual(&ra));
            }
            float = float.max(ra.residual(&model.rep_via_generators(&a)?));
            for (_, c) in a.terms() {
                float = float.max((model.eval(c) - model.eval_float(c)).norm());
            }
        }
        Ok(())
    };
    if let Err(e) = run() {
        return vec![error_entry("spectral:representation", e)];
    }
    let mut entries = vec![within(
        "spectral:homomorphism",
        hom,
        TOLERANCE,
        "rep(ab) ≠ rep(a)rep(b)",
    )];
    if q.source().has_involution() {
        entries.push(within(
            "spectral:involution",
            inv,
            TOLERANCE,
            "rep(a*) ≠ rep(a)†",
        ));
    }
    entries.push(within(
        "spectral:exact-vs-float",
        float,
        TOLERANCE,
        "exact and floating evaluation differ",
    ));
    entries
}

type Vector = BTreeMap<usize, C64>;

fn add_into(v: &mut Vector, i: usize, x: C64) {
    *v.entry(i).or_default() += x;
}

fn diff(a: &Vector, b: &Vector) -> f64 {
    a.keys()
        .chain(b.keys())
        .map(|k| {
            (a.get(k).cloned().unwrap_or_default() - b.get(k).cloned().unwrap_or_default()).norm()
        })
        .fold(0.0, f64::max)
}

/// Eigenvalue of a Cartan word on the mode `(n, m)`.
fn mode_scalar(
    action: &GeneratorAction,
    w: &OpWord,
    n: i64,
    m: i64,
) -> Result<Scalar, SpectralError> {
    let cd = action.cartan();
    let mut out = Scalar::one();
    for s in w.symbols() {
        let comp = |h: usize| -> Result<BigInt, SpectralError> {
            match cd.slot_of(h) {
                Some(0) => Ok(n.into()),
                Some(_) => Ok(m.into()),
                None => Err(SpectralError::Unsupported(s.to_string())),
            }
        };
        let factor = match s {
            Symbol::H(h) => Scalar::from_integer(comp(*h)?),
            Symbol::Exp { h, k } => Scalar::lambda_pow(k * comp(*h)?),
            Symbol::QuadExp(k) => Scalar::lambda_pow(k * BigInt::from(n) * m),
            Symbol::X(..) => return Err(SpectralError::Unsupported(s.to_string())),
        };
        out = &out * &factor;
    }
    Ok(out)
}

/// `L(ul a · v)` three ways: acting on the vector, as `μ((Δl)Ψ⁻¹ ▷ (a⊗v))`,
/// and as `Σ ul(L₍₁₎ ▷ a)(L₍₂₎ ▷ v)` with the twisted coproduct; the
/// residual is the largest disagreement over window-safe basis vectors.
pub fn check_crossproduct_equivariance(
    model: &SpectralModel,
    action: &GeneratorAction,
    word: &OpWord,
    a: &Element,
) -> CheckEntry {
    let id = format!("spectral:crossproduct:{word}:{a}");
    match crossproduct_residual(model, action, word, a) {
        Ok(r) => within(id, r, TOLERANCE, "crossproduct"),
        Err(e) => error_entry(&id, e),
    }
}

pub fn crossproduct_residual(
    model: &SpectralModel,
    action: &GeneratorAction,
    word: &OpWord,
    a: &Element,
) -> Result<f64, SpectralError> {
    let q = model.quantization();
    let p = q.source().clone();
    let twisted = TwistedAction::new(action.clone());
    let classical_hopf = HopfStructure::classical(action.cartan().clone());
    let twisted_hopf = HopfStructure::twisted(action.cartan().clone());
    let delta0 = classical_hopf.coproduct_word(word)?;
    let delta = twisted_hopf.coproduct_word(word)?;
    let ul_a = q.lift(a)?;
    let rep = model.rep_deformed(&ul_a)?;
    let twisted_ops = delta
        .terms()
        .iter()
        .map(|(_, words)| model.rep_deformed(&twisted.act(&words[0], &ul_a)?))
        .collect::<Result<Vec<_>, SpectralError>>()?;
    let mut worst = 0.0f64;
    for j in 0..model.dim() {
        let Some(col) = rep.apply(j) else { continue };
        let (n, m, s) = model.mode(j);
        let mut direct = Vector::new();
        for &(i, x) in col {
            let (ni, mi, _) = model.mode(i);
            add_into(
                &mut direct,
                i,
                x * model.eval(&mode_scalar(action, word, ni, mi)?),
            );
        }
        let mut classical = Vector::new();
        for (w, c) in a.terms() {
            let d = w.degree(&p);
            let psi_inv = c.shift(&(&d.n1 * m));
            let term = Element::term(&p, w.clone(), psi_inv);
            for (k, words) in delta0.terms() {
                let left = action.act(&words[0], &term)?;
                let right = mode_scalar(action, &words[1], n, m)?;
                for (w2, c2) in left.terms() {
                    let d2 = w2.degree(&p);
                    if let Some(i) = model.index(&(&d2.n1 + n), &(&d2.n2 + m), s) {
                        add_into(&mut classical, i, model.eval(&(&(k * c2) * &right)));
                    }
                }
            }
        }
        let mut twisted_side = Vector::new();
        for ((k, words), op) in delta.terms().iter().zip(&twisted_ops) {
            let right = model.eval(&(k * &mode_scalar(action, &words[1], n, m)?));
            if let Some(col) = op.apply(j) {
                for &(i, x) in col {
                    add_into(&mut twisted_side, i, x * right);
                }
            }
        }
        worst = worst
            .max(diff(&direct, &classical))
            .max(diff(&direct, &twisted_side));
    }
    Ok(worst)
}
