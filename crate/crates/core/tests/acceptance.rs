//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the lines are always printed; exits nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;

use std::time::{Duration, Instant};

use isotwist::algebra::{
    check_associativity, check_star_associativity, check_star_product, BasisKey, Element,
    Quantization,
};
use isotwist::calculus::{check_calculus, check_form_action, sample_forms, TwistedFormAction};
use isotwist::check::{all_pass, CheckEntry};
use isotwist::cli::{run_suite, Format, Options, Suite};
use isotwist::fixtures;
use isotwist::sampling::SampleSpec;
use isotwist::scalars::Scalar;
use isotwist::spectral::{
    check_boundedness_and_isospectrality, check_isometry, check_relations, dirac_spectrum,
    dirac_spectrum_closed_form, SpectralModel,
};
use isotwist::symmetry::{check_lie_relations, check_serre};
use isotwist::twist::{
    check_hopf_axioms, check_module_algebra, check_r_matrix, check_star_compat, generator_symbols,
    HopfStructure, Twist, TwistedAction,
};
use num::{BigInt, BigRational};

/// Absolute tolerance for floating-point spectral quantities.
const SPECTRAL_TOL: f64 = 1e-12;
const SAMPLES: usize = 500;

struct Outcome {
    pass: bool,
    detail: String,
}

fn failures(entries: &[CheckEntry]) -> String {
    let bad: Vec<String> = entries
        .iter()
        .filter(|e| !e.passed())
        .map(|e| format!("{} ({})", e.id, e.counterexample.as_deref().unwrap_or("")))
        .collect();
    bad.join("; ")
}

fn entries_outcome(
    entries: &[CheckEntry],
    elapsed: Duration,
    limit: Option<Duration>,
    what: &str,
) -> Outcome {
    let within = limit.is_none_or(|l| elapsed < l);
    let timing = match limit {
        Some(l) => format!("{:.2} s < {} s", elapsed.as_secs_f64(), l.as_secs()),
        None => format!("{:.2} s", elapsed.as_secs_f64()),
    };
    if all_pass(entries) && within {
        Outcome {
            pass: true,
            detail: format!("{} checks, {what}; {timing}", entries.len()),
        }
    } else if !within {
        Outcome {
            pass: false,
            detail: format!("too slow: {timing}"),
        }
    } else {
        Outcome {
            pass: false,
            detail: failures(entries),
        }
    }
}

fn spec(trials: usize) -> SampleSpec {
    SampleSpec {
        max_degree: 5,
        trials,
        seed: 42,
    }
}

/// Star product from the closed form `w₁ ⋆ w₂ = λ^{n₁(w₁) n₂(w₂)} w₁w₂`
/// on basis words of a commutative algebra.
fn oracle_star(a: &Element, b: &Element) -> Element {
    let p = a.presentation();
    let mut out = Element::zero(p);
    for (w1, c1) in a.terms() {
        for (w2, c2) in b.terms() {
            let k = &w1.degree(p).n1 * &w2.degree(p).n2;
            let prod = &Element::term(p, w1.clone(), c1.clone())
                * &Element::term(p, w2.clone(), c2.clone());
            out = &out + &prod.scale(&Scalar::lambda_pow(k));
        }
    }
    out
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let twist = Twist::cartan();
    let exact = twist.check_cocycle() && twist.check_counit();
    let elapsed = start.elapsed();
    // oracle: f(p,q) = −p₁q₂ evaluated on a grid of integer degrees
    let f = |p: (i64, i64), q: (i64, i64)| -p.0 * q.1;
    let mut grid_ok = true;
    let mut vals = BTreeMap::new();
    let range = -3..=3;
    for p1 in range.clone() {
        for p2 in range.clone() {
            for q1 in range.clone() {
                for q2 in range.clone() {
                    vals.insert("p1".to_string(), BigInt::from(p1));
                    vals.insert("p2".to_string(), BigInt::from(p2));
                    vals.insert("q1".to_string(), BigInt::from(q1));
                    vals.insert("q2".to_string(), BigInt::from(q2));
                    grid_ok &= twist.exponent().evaluate(&vals).unwrap()
                        == BigInt::from(f((p1, p2), (q1, q2)));
                    for r in [(1, -2), (0, 3), (-1, 1)] {
                        let l = f((p1, p2), (q1, q2)) + f((p1 + q1, p2 + q2), r);
                        let rr = f((q1, q2), r) + f((p1, p2), (q1 + r.0, q2 + r.1));
                        grid_ok &= l == rr;
                    }
                }
            }
        }
    }
    let pass = exact && grid_ok && elapsed < Duration::from_secs(1);
    Outcome {
        pass,
        detail: format!(
            "exact form identity {exact}, grid oracle {grid_ok}; {:.3} s < 1 s",
            elapsed.as_secs_f64()
        ),
    }
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut entries = Vec::new();
    let mut oracle_ok = true;
    for p in [fixtures::t2(), fixtures::c3()] {
        let q = Quantization::new(&p);
        let triples = spec(SAMPLES).elements(&p, 3);
        let lifted: Vec<Vec<Element>> = triples
            .iter()
            .map(|t| t.iter().map(|a| q.lift(a).unwrap()).collect())
            .collect();
        entries.push(check_associativity(q.target(), &lifted));
        entries.push(check_star_associativity(&q, &triples));
        for t in triples.iter().take(100) {
            let lhs = oracle_star(&oracle_star(&t[0], &t[1]), &t[2]);
            let rhs = oracle_star(&t[0], &oracle_star(&t[1], &t[2]));
            let kernel = q.unlift(&q.star_product(&t[0], &t[1]).unwrap()).unwrap();
            oracle_ok &= lhs == rhs && kernel == oracle_star(&t[0], &t[1]);
        }
    }
    if !oracle_ok {
        entries.push(CheckEntry::fail(
            "oracle",
            "closed-form star product disagrees",
        ));
    }
    entries_outcome(
        &entries,
        start.elapsed(),
        Some(Duration::from_secs(10)),
        "500 triples each in T2 and C3",
    )
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let entries: Vec<CheckEntry> = [fixtures::t2(), fixtures::c3()]
        .iter()
        .map(|p| {
            check_star_product(
                &Quantization::new(p),
                &spec(SAMPLES).homogeneous_tuples(p, 2),
            )
        })
        .collect();
    entries_outcome(
        &entries,
        start.elapsed(),
        Some(Duration::from_secs(10)),
        "500 homogeneous pairs each",
    )
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let action = fixtures::a2_on_c3();
    let mut entries = check_lie_relations(&action, 5);
    entries.extend(check_serre(&action, 5));
    entries_outcome(
        &entries,
        start.elapsed(),
        Some(Duration::from_secs(30)),
        "all C3 monomials of degree ≤ 5",
    )
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let action = fixtures::a2_on_c3();
    let hopf = HopfStructure::twisted(action.cartan().clone());
    let symbols = generator_symbols(action.cartan(), true);
    let triples = spec(200).homogeneous_tuples(action.presentation(), 3);
    let entries = check_hopf_axioms(&hopf, &action, &symbols, &triples);
    entries_outcome(
        &entries,
        start.elapsed(),
        None,
        "coassociativity, counit, antipode on 200 triples",
    )
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let action = fixtures::a2_on_c3();
    let cd = action.cartan().clone();
    let symbols = generator_symbols(&cd, true);
    let pairs = spec(SAMPLES).homogeneous_tuples(action.presentation(), 2);
    let twisted = TwistedAction::new(action.clone());
    let entries = check_module_algebra(
        &twisted,
        &HopfStructure::twisted(cd.clone()),
        &symbols,
        &pairs,
    );
    let control = check_module_algebra(&twisted, &HopfStructure::classical(cd), &symbols, &pairs);
    let control_fails = control.iter().any(|e| !e.passed());
    let mut out = entries_outcome(&entries, start.elapsed(), None, "500 pairs");
    out.pass &= control_fails;
    out.detail += &format!("; untwisted control fails: {control_fails}");
    out
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let action = fixtures::a2_on_c3();
    let hopf = HopfStructure::twisted(action.cartan().clone());
    let symbols = generator_symbols(action.cartan(), true);
    let singles = spec(200).homogeneous_tuples(action.presentation(), 1);
    let entries = check_star_compat(&TwistedAction::new(action), &hopf, &symbols, &singles);
    let has_u = entries.iter().any(|e| e.id == "star:star2-u");
    let mut out = entries_outcome(
        &entries,
        start.elapsed(),
        None,
        "including the U-form of the deformed star",
    );
    out.pass &= has_u;
    out
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let action = fixtures::a2_on_c3();
    let hopf = HopfStructure::twisted(action.cartan().clone());
    let symbols = generator_symbols(action.cartan(), true);
    let pairs = spec(200).homogeneous_tuples(action.presentation(), 2);
    let entries = check_r_matrix(&Twist::cartan(), &hopf, &action, &symbols, &pairs);
    entries_outcome(
        &entries,
        start.elapsed(),
        None,
        "triangularity exact, intertwining on 200 pairs",
    )
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    let action = fixtures::a2_on_c3();
    let p = action.presentation().clone();
    let forms = sample_forms(
        &p,
        &SampleSpec {
            max_degree: 3,
            trials: 200,
            seed: 42,
        },
        3,
        3,
    );
    let tw = TwistedFormAction::new(action.clone());
    let hopf = HopfStructure::twisted(action.cartan().clone());
    let mut entries = check_calculus(&tw, &forms);
    entries.extend(check_form_action(
        &tw,
        &hopf,
        &generator_symbols(action.cartan(), true),
        &forms,
    ));
    entries_outcome(&entries, start.elapsed(), None, "forms of degree ≤ 3")
}

fn criterion_10() -> Outcome {
    let start = Instant::now();
    let theta = BigRational::new(1.into(), 5.into());
    let model = SpectralModel::new(&fixtures::t2(), 8, theta).unwrap();
    let isometry = check_isometry(&model);
    let iso_zero = isometry
        .iter()
        .filter(|e| e.id.starts_with("spectral:isometry"))
        .all(|e| e.residual == Some(0.0));
    let (bounded, summary) = check_boundedness_and_isospectrality(&model, &[4, 8, 16]);
    let norms_one = summary
        .commutator_norms
        .iter()
        .filter(|r| r.operator == "[D,u]" || r.operator == "[D,v]")
        .all(|r| {
            (r.deformed - 1.0).abs() <= SPECTRAL_TOL && (r.undeformed - 1.0).abs() <= SPECTRAL_TOL
        });
    let relation = check_relations(&model);
    // oracle: the closed-form spectrum ±√(n²+m²) computed here
    let mut closed = Vec::new();
    for n in -8i64..=8 {
        for m in -8i64..=8 {
            let r = ((n * n + m * m) as f64).sqrt();
            closed.extend([r, -r]);
        }
    }
    closed.sort_by(f64::total_cmp);
    let spectrum = dirac_spectrum(&model);
    let spectrum_ok = spectrum.len() == closed.len()
        && spectrum
            .iter()
            .zip(&closed)
            .all(|(a, b)| (a - b).abs() <= SPECTRAL_TOL)
        && dirac_spectrum_closed_form(8) == closed;
    let mut entries = isometry;
    entries.extend(bounded);
    entries.push(relation.clone());
    let elapsed = start.elapsed();
    let pass = all_pass(&entries)
        && iso_zero
        && norms_one
        && spectrum_ok
        && elapsed < Duration::from_secs(10);
    Outcome {
        pass,
        detail: format!(
            "N = 8, θ = 1/5: isometry exactly 0 {iso_zero}; ‖[D,u]‖ = ‖[D,v]‖ = 1 ± {SPECTRAL_TOL:e} for N ∈ {{4,8,16}} {norms_one}; \
             relation residual {:e}; spectrum matches {spectrum_ok}; {:.2} s < 10 s{}",
            relation.residual.unwrap_or(f64::NAN),
            elapsed.as_secs_f64(),
            if all_pass(&entries) { String::new() } else { format!("; {}", failures(&entries)) }
        ),
    }
}

fn criterion_11() -> Outcome {
    let options = Options::default();
    let a = run_suite(Suite::All, &[], &options).map(|r| r.emit(Format::Json));
    let b = run_suite(Suite::All, &[], &options).map(|r| r.emit(Format::Json));
    match (a, b) {
        (Ok(a), Ok(b)) => Outcome {
            pass: a == b && a.contains("\"status\": \"pass\""),
            detail: format!(
                "check --suite all --seed 0 twice: {} bytes, identical {}",
                a.len(),
                a == b
            ),
        },
        (Err(e), _) | (_, Err(e)) => Outcome {
            pass: false,
            detail: e.to_string(),
        },
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("cocycle condition", criterion_1),
        ("star-product associativity", criterion_2),
        ("quantization oracle", criterion_3),
        ("Lie and Serre relations", criterion_4),
        ("twisted Hopf axioms", criterion_5),
        ("module algebra", criterion_6),
        ("star compatibility", criterion_7),
        ("R-matrix", criterion_8),
        ("differential calculus", criterion_9),
        ("spectral triple", criterion_10),
        ("determinism", criterion_11),
    ];
    let mut all = true;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        all &= o.pass;
        println!(
            "criterion {:>2} {}: {} — {}",
            k + 1,
            if o.pass { "PASS" } else { "FAIL" },
            name,
            o.detail
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
