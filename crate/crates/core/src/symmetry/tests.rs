use std::collections::BTreeMap;
use std::sync::Arc;

use super::*;
use crate::algebra::{Element, Generator, GradedPresentation, Word};
use crate::check::{all_pass, Status};
use crate::fixtures;
use crate::sampling::{enumerate_words, Sampler, WordsByDegree};
use crate::scalars::Scalar;

fn el(p: &Arc<GradedPresentation>, name: &str) -> Element {
    Element::generator_named(p, name).unwrap()
}

fn x(i: usize, s: Sign) -> OpWord {
    OpWord::single(Symbol::X(i, s))
}

#[test]
fn c3_action_examples() {
    let ga = fixtures::a2_on_c3();
    let p = ga.presentation().clone();
    let z1 = el(&p, "z1");
    let z2 = el(&p, "z2");
    assert_eq!(ga.act(&x(0, Sign::Plus), &z2).unwrap(), z1);
    let expected = (&z1 * &z2).scale(&Scalar::from_integer(2));
    assert_eq!(ga.act(&x(0, Sign::Plus), &(&z2 * &z2)).unwrap(), expected);
    let h1 = OpWord::single(Symbol::H(0));
    assert!(ga.act(&h1, &(&z1 * &z2)).unwrap().is_zero());
}

/// Polynomial in `z₁..z₃, w₁..w₃` with integer coefficients, acted on by
/// `D_M = Σ M_{ab}(z_a∂_{z_b} − w_b∂_{w_a})` for a 3×3 integer matrix `M`.
type Poly = BTreeMap<[u32; 6], i64>;

fn matrix_field(m: &[[i64; 3]; 3], poly: &Poly) -> Poly {
    let mut out = Poly::new();
    let mut add = |k: [u32; 6], c: i64| {
        let e = out.entry(k).or_insert(0);
        *e += c;
        if *e == 0 {
            out.remove(&k);
        }
    };
    for (mono, &c) in poly {
        for a in 0..3 {
            for b in 0..3 {
                if m[a][b] == 0 {
                    continue;
                }
                // z_a ∂_{z_b}
                if mono[b] > 0 {
                    let mut k = *mono;
                    k[b] -= 1;
                    k[a] += 1;
                    add(k, c * m[a][b] * mono[b] as i64);
                }
                // −w_b ∂_{w_a}
                if mono[3 + a] > 0 {
                    let mut k = *mono;
                    k[3 + a] -= 1;
                    k[3 + b] += 1;
                    add(k, -c * m[a][b] * mono[3 + a] as i64);
                }
            }
        }
    }
    out
}

fn e(a: usize, b: usize) -> [[i64; 3]; 3] {
    let mut m = [[0; 3]; 3];
    m[a][b] = 1;
    m
}

fn poly_of(el: &Element) -> Poly {
    el.terms()
        .map(|(w, c)| {
            let k: [u32; 6] = w.exponents().try_into().unwrap();
            let n = c.as_constant().unwrap();
            assert!(num::Zero::is_zero(&n.im) && n.re.is_integer());
            (k, n.re.to_integer().try_into().unwrap())
        })
        .collect()
}

#[test]
fn action_matches_sl3_matrix_oracle() {
    let ga = fixtures::a2_on_c3();
    let p = ga.presentation().clone();
    let generators = [
        (x(0, Sign::Plus), e(0, 1)),
        (x(0, Sign::Minus), e(1, 0)),
        (x(1, Sign::Plus), e(1, 2)),
        (x(1, Sign::Minus), e(2, 1)),
    ];
    for w in enumerate_words(6, 3) {
        let a = Element::term(&p, w.clone(), Scalar::one());
        for (sym, m) in &generators {
            let kernel = poly_of(&ga.act(sym, &a).unwrap());
            let oracle = matrix_field(m, &poly_of(&a));
            assert_eq!(kernel, oracle, "{sym} on {a}");
        }
    }
}

#[test]
fn matrix_oracle_satisfies_sl3_brackets() {
    // [D_M, D_N] = D_{[M,N]} on a test polynomial; sanity for the oracle itself
    let mut poly = Poly::new();
    poly.insert([1, 2, 0, 0, 1, 1], 3);
    poly.insert([0, 1, 1, 2, 0, 0], -2);
    let (m, n) = (e(0, 1), e(1, 0));
    let mut bracket = [[0i64; 3]; 3];
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                bracket[a][b] += m[a][c] * n[c][b] - n[a][c] * m[c][b];
            }
        }
    }
    let mn = matrix_field(&m, &matrix_field(&n, &poly));
    let nm = matrix_field(&n, &matrix_field(&m, &poly));
    let mut lhs = mn.clone();
    for (k, c) in nm {
        let v = lhs.entry(k).or_insert(0);
        *v -= c;
        if *v == 0 {
            lhs.remove(&k);
        }
    }
    assert_eq!(lhs, matrix_field(&bracket, &poly));
}

#[test]
fn a2_relations_pass() {
    let ga = fixtures::a2_on_c3();
    let lie = check_lie_relations(&ga, 3);
    assert!(all_pass(&lie), "{lie:?}");
    assert_eq!(lie.len(), 1 + 8 + 4);
    let serre = check_serre(&ga, 3);
    assert!(all_pass(&serre), "{serre:?}");
    assert_eq!(serre.len(), 4);
}

#[test]
fn unsigned_serre_fails_on_a2() {
    let ga = fixtures::a2_on_c3();
    let unsigned = serre_expr(&ga, 0, 1, Sign::Plus, false);
    let words = enumerate_words(6, 3);
    assert!(operator_counterexample(&ga, &unsigned, &OpExpr::zero(), &words).is_some());
}

fn z_only() -> Arc<GradedPresentation> {
    Arc::new(
        GradedPresentation::commutative(
            "C3z",
            vec![
                Generator::new("z1", 1, 0),
                Generator::new("z2", -1, 1),
                Generator::new("z3", 0, -1),
            ],
        )
        .unwrap(),
    )
}

#[test]
fn broken_normalization_is_reported_on_z1() {
    let p = z_only();
    let rules = [
        ActionRule {
            index: 0,
            sign: Sign::Plus,
            generator: 1,
            image: el(&p, "z1").scale(&Scalar::from_integer(2)),
        },
        ActionRule {
            index: 0,
            sign: Sign::Minus,
            generator: 0,
            image: el(&p, "z2"),
        },
    ];
    let ga = GeneratorAction::new(CartanData::a2(), &p, rules).unwrap();
    let lie = check_lie_relations(&ga, 2);
    let entry = lie.iter().find(|e| e.id == "lie:[X1+,X1-]").unwrap();
    assert_eq!(entry.status, Status::Fail);
    let ce = entry.counterexample.as_deref().unwrap();
    assert!(ce.starts_with("on z1: lhs = 2*z1"), "{ce}");
}

#[test]
fn abelian_symmetry_checks_only_cartan() {
    let p = fixtures::t2();
    let ga = fixtures::torus_symmetry(&p);
    let lie = check_lie_relations(&ga, 4);
    assert_eq!(lie.len(), 1);
    assert!(all_pass(&lie));
}

#[test]
fn wrong_degree_shift_rejected() {
    let p = z_only();
    let rules = [ActionRule {
        index: 1,
        sign: Sign::Plus,
        generator: 2,
        image: el(&p, "z1"),
    }];
    let err = GeneratorAction::new(CartanData::a2(), &p, rules).unwrap_err();
    assert!(matches!(err, SymmetryError::DegreeShift { .. }), "{err}");
}

#[test]
fn derivation_must_respect_relations() {
    // on the deformed plane a classical derivation u ↦ v-shift is not allowed
    let p = Arc::new(
        GradedPresentation::commutative(
            "T",
            vec![Generator::new("a", 1, 0), Generator::new("b", 0, 1)],
        )
        .unwrap()
        .quantize(),
    );
    // x₁⁺ shifts by (2,-1); a ↦ ... none match, so use a self-consistent
    // pair of degrees with zero-degree generators instead
    let q = Arc::new(
        GradedPresentation::new(
            "Q",
            vec![Generator::new("a", 0, 0), Generator::new("b", 2, -1)],
            vec![vec![0.into(), 1.into()], vec![(-1).into(), 0.into()]],
        )
        .unwrap(),
    );
    let rules = [ActionRule {
        index: 0,
        sign: Sign::Plus,
        generator: 0,
        image: el(&q, "b"),
    }];
    let err = GeneratorAction::new(CartanData::a2(), &q, rules).unwrap_err();
    assert!(
        matches!(err, SymmetryError::RelationViolation { .. }),
        "{err}"
    );
    assert!(GeneratorAction::new(CartanData::a2(), &p, []).is_ok());
}

#[test]
fn cartan_generators_act_as_derivations() {
    let ga = fixtures::a2_on_c3();
    let p = ga.presentation().clone();
    let by_degree = WordsByDegree::new(&p, 3);
    let mut s = Sampler::new(7);
    for _ in 0..50 {
        let a = s.homogeneous(&p, &by_degree, 3);
        let b = s.homogeneous(&p, &by_degree, 3);
        for i in 0..2 {
            let h = OpWord::single(Symbol::H(i));
            let lhs = ga.act(&h, &(&a * &b)).unwrap();
            let rhs = &(&ga.act(&h, &a).unwrap() * &b) + &(&a * &ga.act(&h, &b).unwrap());
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn word_action_composes() {
    let ga = fixtures::a2_on_c3();
    let p = ga.presentation().clone();
    let words: Vec<Word> = enumerate_words(6, 3);
    let mut s = Sampler::new(11);
    let w1 = OpWord(vec![Symbol::X(0, Sign::Plus), Symbol::exp(1, 2)]);
    let w2 = OpWord(vec![Symbol::H(1), Symbol::X(1, Sign::Minus), Symbol::u()]);
    for _ in 0..30 {
        let a = s.element(&p, &words, 3);
        let joint = ga.act(&w1.then(&w2), &a).unwrap();
        let nested = ga.act(&w1, &ga.act(&w2, &a).unwrap()).unwrap();
        assert_eq!(joint, nested);
    }
}

#[test]
fn exponential_of_non_grading_generator_is_an_error() {
    let ga = fixtures::a2_on_c3();
    let a = Element::unit(ga.presentation());
    assert!(matches!(
        ga.act(&OpWord::single(Symbol::exp(5, 1)), &a),
        Err(SymmetryError::IndexOutOfRange(6))
    ));
}
