use std::f64::consts::TAU;
use std::sync::Arc;

use nalgebra::DMatrix;
use num::{BigInt, BigRational};

use super::*;
use crate::algebra::{Element, GradedPresentation};
use crate::check::all_pass;
use crate::fixtures;
use crate::sampling::SampleSpec;
use crate::scalars::{gaussian, Scalar};
use crate::symmetry::{OpWord, Symbol};

fn theta(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn model(cutoff: i64) -> SpectralModel {
    SpectralModel::new(&fixtures::t2(), cutoff, theta(1, 5)).unwrap()
}

fn gen(m: &SpectralModel, name: &str) -> Element {
    Element::generator_named(m.quantization().target(), name).unwrap()
}

fn dense(op: &WindowedOperator) -> DMatrix<C64> {
    let mut out = DMatrix::zeros(op.dim(), op.dim());
    for j in (0..op.dim()).filter(|&j| op.is_valid(j)) {
        for &(i, v) in op.column(j) {
            out[(i, j)] = v;
        }
    }
    out
}

#[test]
fn generators_match_the_explicit_torus_representation() {
    // u e_{n,m} = e^{2πiθm} e_{n+1,m},  v e_{n,m} = e_{n,m+1}
    let md = model(2);
    let th = 0.2;
    let (u, v) = (
        md.rep_deformed(&gen(&md, "u")).unwrap(),
        md.rep_deformed(&gen(&md, "v")).unwrap(),
    );
    for j in 0..md.dim() {
        let (n, m, s) = md.mode(j);
        let target = |dn: i64, dm: i64| md.index(&BigInt::from(n + dn), &BigInt::from(m + dm), s);
        assert_eq!(u.is_valid(j), n < 2);
        assert_eq!(v.is_valid(j), m < 2);
        if let Some(i) = target(1, 0) {
            let expected = C64::from_polar(1.0, TAU * th * m as f64);
            assert_eq!(u.column(j).len(), 1);
            assert_eq!(u.column(j)[0].0, i);
            assert!((u.column(j)[0].1 - expected).norm() < 1e-14);
        }
        if let Some(i) = target(0, 1) {
            assert_eq!(v.column(j), &[(i, C64::new(1.0, 0.0))]);
        }
    }
}

#[test]
fn exact_root_table() {
    let md = SpectralModel::new(&fixtures::t2(), 1, theta(1, 4)).unwrap();
    assert!((md.lambda_pow(&BigInt::from(1)) - C64::new(0.0, 1.0)).norm() < 1e-15);
    let big = BigInt::from(10).pow(30) + 2;
    assert!((md.lambda_pow(&big) - C64::new(-1.0, 0.0)).norm() < 1e-15);
    let s = &Scalar::monomial(gaussian(2, 1), 3) + &Scalar::lambda_pow(-7);
    assert!((md.eval(&s) - md.eval_float(&s)).norm() < 1e-12);
}

#[test]
fn norm_matches_dense_singular_values() {
    let md = model(3);
    let u = gen(&md, "u");
    let v = gen(&md, "v");
    let a = &(&u + &v.scale(&Scalar::from_integer(2))) + &(&u * &v);
    let op = md.dirac().commutator(&md.rep_deformed(&a).unwrap());
    let oracle = dense(&op).singular_values().max();
    assert!(
        (op.norm() - oracle).abs() < 1e-10,
        "{} vs {oracle}",
        op.norm()
    );
}

#[test]
fn dirac_is_hermitian_and_squares_to_laplacian() {
    let md = model(2);
    let d = md.dirac();
    assert_eq!(d.adjoint_residual(&d), 0.0);
    let d2 = d.mul(&d);
    for j in 0..md.dim() {
        let (n, m, _) = md.mode(j);
        let r2 = (n * n + m * m) as f64;
        let expected: &[(usize, C64)] = if r2 == 0.0 {
            &[]
        } else {
            &[(j, C64::new(r2, 0.0))]
        };
        assert_eq!(d2.column(j), expected);
    }
}

#[test]
fn isometry_and_control() {
    let entries = check_isometry(&model(4));
    assert!(all_pass(&entries), "{entries:?}");
    assert_eq!(entries.len(), 3);
    assert_eq!(entries[0].residual, Some(0.0));
    assert!(entries[2].residual.unwrap() >= 1.0 - TOLERANCE);
}

#[test]
fn commutator_norms_are_one_and_spectrum_is_undeformed() {
    let (entries, summary) = check_boundedness_and_isospectrality(&model(2), &[2, 4]);
    assert!(all_pass(&entries), "{entries:?}");
    for r in &summary.commutator_norms {
        let expected = if r.operator == "[D,1]" { 0.0 } else { 1.0 };
        assert!((r.deformed - expected).abs() < TOLERANCE, "{r:?}");
        assert!((r.undeformed - expected).abs() < TOLERANCE, "{r:?}");
    }
    assert_eq!(summary.spectrum.dimension, 50);
    assert_eq!(summary.spectrum.lowest[0], (0.0, 2));
    assert_eq!(summary.spectrum.lowest[1].1, 8);
}

#[test]
fn closed_form_spectrum_counts() {
    let s = dirac_spectrum_closed_form(1);
    assert_eq!(s.len(), 18);
    assert_eq!(s.iter().filter(|x| **x == 0.0).count(), 2);
    assert!((s[17] - 2f64.sqrt()).abs() < 1e-15);
}

#[test]
fn relations_hold_deformed_and_fail_undeformed() {
    let md = model(3);
    let e = check_relations(&md);
    assert!(e.passed(), "{e:?}");
    // undeformed operators commute, so they miss uv = λvu
    let flat = md.undeformed();
    let (u, v) = (
        flat.rep_generator(0).unwrap(),
        flat.rep_generator(1).unwrap(),
    );
    let lam = md.lambda_pow(&BigInt::from(1));
    assert!(u.mul(&v).residual(&v.mul(&u).scale(lam)) > 0.5);
}

#[test]
fn representation_checks_pass() {
    let spec = SampleSpec {
        max_degree: 3,
        trials: 20,
        seed: 3,
    };
    let entries = check_representation(&model(4), &spec);
    assert!(all_pass(&entries), "{entries:?}");
    assert_eq!(entries.len(), 3);
}

#[test]
fn crossproduct_equivariance_for_torus_words() {
    let md = model(3);
    let p = md.quantization().source().clone();
    let action = fixtures::torus_symmetry(&p);
    let words = [
        OpWord::single(Symbol::H(0)),
        OpWord::single(Symbol::H(1)),
        OpWord(vec![Symbol::H(0), Symbol::H(1)]),
        OpWord::single(Symbol::exp(0, 2)),
    ];
    let u = Element::generator_named(&p, "u").unwrap();
    let v = Element::generator_named(&p, "v").unwrap();
    let elements = [u.clone(), Element::unit(&p), &u * &v, &u + &v.pow(2)];
    for w in &words {
        for a in &elements {
            let e = check_crossproduct_equivariance(&md, &action, w, a);
            assert!(e.passed(), "{e:?}");
        }
    }
    let x = OpWord::single(Symbol::X(0, crate::symmetry::Sign::Plus));
    assert!(crossproduct_residual(&md, &action, &x, &u).is_err());
}

#[test]
fn errors() {
    let t2 = fixtures::t2();
    let quantum: Arc<GradedPresentation> = Arc::new(t2.quantize());
    assert!(matches!(
        SpectralModel::new(&quantum, 2, theta(1, 5)),
        Err(SpectralError::NotCommutative(_))
    ));
    assert!(matches!(
        SpectralModel::new(&t2, 0, theta(1, 5)),
        Err(SpectralError::Cutoff(0))
    ));
    let big = BigRational::new(1.into(), BigInt::from(1u64 << 40));
    assert!(matches!(
        SpectralModel::new(&t2, 2, big),
        Err(SpectralError::Theta(_))
    ));
    let md = model(2);
    let u3 = gen(&md, "u").pow(3);
    assert!(matches!(
        md.rep_deformed(&u3),
        Err(SpectralError::Budget { cutoff: 2, .. })
    ));
}
