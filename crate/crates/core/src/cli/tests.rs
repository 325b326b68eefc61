use std::sync::Arc;

use super::*;
use crate::algebra::{Element, GradedPresentation};
use crate::check::Status;
use crate::fixtures;
use crate::sampling::{enumerate_words, SampleSpec, Sampler};
use crate::scalars::{gaussian, Scalar};
use crate::symmetry::Sign;

fn deformed_t2() -> Arc<GradedPresentation> {
    Arc::new(fixtures::t2().quantize())
}

fn small() -> Options {
    Options {
        sample: SampleSpec {
            max_degree: 3,
            trials: 12,
            seed: 1,
        },
        cutoff: 3,
        ..Options::default()
    }
}

#[test]
fn expression_examples() {
    let t2 = fixtures::t2();
    let e = parse_expression("L * u v^2", &t2).unwrap();
    let u = Element::generator_named(&t2, "u").unwrap();
    let v = Element::generator_named(&t2, "v").unwrap();
    assert_eq!(e, (&u * &v.pow(2)).scale(&Scalar::lambda_pow(1)));

    let q = deformed_t2();
    assert!(parse_expression("u*v - L v*u", &q).unwrap().is_zero());
    assert!(!parse_expression("u*v - v*u", &q).unwrap().is_zero());

    let c3 = fixtures::c3();
    let z1 = Element::generator_named(&c3, "z1").unwrap();
    let half = &Scalar::from_gaussian(gaussian(1, 1))
        * &Scalar::from_rational(num::BigRational::new(1.into(), 2.into()));
    assert_eq!(
        parse_expression("(1+i)/2 * z1", &c3).unwrap(),
        z1.scale(&half)
    );
}

#[test]
fn precedence() {
    let t2 = fixtures::t2();
    let p = |s| parse_expression(s, &t2).unwrap();
    // unary minus binds looser than products, `^` tighter than juxtaposition
    assert_eq!(p("-u v^2"), -&p("u*(v*v)"));
    assert_eq!(p("2 u - 3 v + u"), p("3*u - 3*v"));
    assert_eq!(p("L^-2 u"), p("u / L^2"));
    assert_eq!(p("L^(-1)"), p("1/L"));
    assert_eq!(p("(u + v)^2"), p("u^2 + 2 u v + v^2"));
    assert_eq!(p("i i"), p("-1"));
}

#[test]
fn syntax_errors_carry_positions() {
    let t2 = fixtures::t2();
    let e = parse_expression("u + * v", &t2).unwrap_err();
    assert_eq!((e.line, e.column), (1, 5), "{e}");
    let e = parse_expression("u +\n  q", &t2).unwrap_err();
    assert_eq!((e.line, e.column), (2, 3));
    assert!(e.message.contains("unknown generator `q`"));
    let e = parse_expression("u / v", &t2).unwrap_err();
    assert_eq!(e.column, 5);
    assert!(parse_expression("(u", &t2).is_err());
    assert!(parse_expression("u $", &t2).is_err());
    assert!(parse_expression("", &t2).is_err());
    assert!(parse_expression("u^-1", &t2).is_err());
}

#[test]
fn rendered_elements_parse_back() {
    let mut s = Sampler::new(5);
    for p in [
        fixtures::c3(),
        Arc::new(fixtures::c3().quantize()),
        deformed_t2(),
    ] {
        let words = enumerate_words(p.len(), 4);
        for _ in 0..200 {
            let a = s.element(&p, &words, 4);
            let text = a.to_string();
            assert_eq!(parse_expression(&text, &p).unwrap(), a, "{text}");
        }
    }
}

#[test]
fn bundled_presentations_match_fixtures() {
    let t2 = parse_presentation(bundled::T2_ALG).unwrap();
    assert_eq!(*t2.source, *fixtures::t2());
    assert!(!t2.deformed);
    let c3 = parse_presentation(bundled::C3_ALG).unwrap();
    assert_eq!(*c3.source, *fixtures::c3());
    for file in [t2, c3] {
        assert_eq!(
            parse_presentation(&render_presentation(&file)).unwrap(),
            file
        );
    }
}

#[test]
fn presentation_round_trip_with_relations() {
    let text = "algebra Q # comment\n\ngenerator a degree 1 0\ngenerator b degree 0 2\ngenerator c degree -1 1\ncommute b a 3\ncommute a c -1\ndeformed\n";
    let file = parse_presentation(text).unwrap();
    assert!(file.deformed);
    assert_eq!(file.source.commutation(1, 0), &3.into());
    assert_eq!(file.source.commutation(0, 1), &(-3).into());
    assert_eq!(file.source.commutation(2, 0), &1.into());
    let again = parse_presentation(&render_presentation(&file)).unwrap();
    assert_eq!(again, file);
    // c' = c + n₁ᵇn₂ᵃ − n₁ᵃn₂ᵇ = 3 + 0 − 2
    assert_eq!(file.algebra().commutation(1, 0), &1.into());
}

#[test]
fn presentation_errors() {
    let bad =
        "algebra T\ngenerator u degree 1 0\ngenerator v degree 0 1\ncommute u v 1\ncommute v u 1\n";
    assert!(
        matches!(parse_presentation(bad), Err(LoadError::Invalid(m)) if m.contains("antisymmetric"))
    );
    let e = parse_presentation("algebra T\ngenerator u degre 1 0\n").unwrap_err();
    assert_eq!(
        e,
        LoadError::Syntax(ParseError::new(2, 13, "expected `degree`"))
    );
    let e = parse_presentation("algebra T\ngenerator u degree 1 x\n").unwrap_err();
    assert!(
        matches!(
            e,
            LoadError::Syntax(ParseError {
                line: 2,
                column: 22,
                ..
            })
        ),
        "{e}"
    );
    assert!(parse_presentation("generator u degree 1 0\n").is_err());
    assert!(parse_presentation("algebra T\ngenerator L degree 1 0\n").is_err());
    assert!(parse_presentation("algebra T\ngenerator u degree 1 0 star q\n").is_err());
    assert!(parse_presentation("algebra T\nfrobnicate\n").is_err());
}

#[test]
fn bundled_symmetry_matches_fixture() {
    let c3 = fixtures::c3();
    let file = parse_symmetry(bundled::A2_SYM, &c3).unwrap();
    let fixture = fixtures::a2_on(&c3);
    assert_eq!(file.action.cartan(), fixture.cartan());
    for i in 0..2 {
        for sign in Sign::both() {
            for g in 0..c3.len() {
                assert_eq!(file.action.image(i, sign, g), fixture.image(i, sign, g));
            }
        }
    }
    let text = render_symmetry(&file);
    assert_eq!(render_symmetry(&parse_symmetry(&text, &c3).unwrap()), text);
}

#[test]
fn symmetry_errors() {
    let c3 = fixtures::c3();
    let shifted = "cartan 2\n2 -1\n-1 2\nx1+ : z1 -> z2\n";
    assert!(
        matches!(parse_symmetry(shifted, &c3), Err(LoadError::Invalid(m)) if m.contains("degree"))
    );
    let e = parse_symmetry("cartan 2\n2 -1\n-1 2\nx1+ : z2 -> 2 q\n", &c3).unwrap_err();
    assert!(
        matches!(
            e,
            LoadError::Syntax(ParseError {
                line: 4,
                column: 15,
                ..
            })
        ),
        "{e}"
    );
    assert!(parse_symmetry("cartan 2\n2 -1\n", &c3).is_err());
    assert!(parse_symmetry("cartan 2\n2 1\n-1 2\n", &c3).is_err());
    assert!(parse_symmetry("x1+ : z2 -> z1\n", &c3).is_err());
    assert!(parse_symmetry("cartan 2\n2 -1\n-1 2\ny1+ : z2 -> z1\n", &c3).is_err());
}

#[test]
fn suites_pass_on_bundled_fixtures() {
    for suite in [
        Suite::Algebra,
        Suite::Hopf,
        Suite::Calculus,
        Suite::Spectral,
    ] {
        let report = run_suite(suite, &[], &small()).unwrap();
        assert!(report.all_passed(), "{}", report.emit(Format::Human));
        assert_eq!(report.status, Status::Pass);
    }
}

#[test]
fn hopf_suite_contains_the_control() {
    let report = run_suite(Suite::Hopf, &[], &small()).unwrap();
    assert!(report.entry("control:module-classical").unwrap().passed());
    assert!(report.entry("twist:cocycle").unwrap().passed());
    assert_eq!(report.inputs, vec!["C3.alg", "A2.sym"]);
}

#[test]
fn broken_symmetry_fails_with_counterexample() {
    let c3 = Input {
        name: "C3.alg".into(),
        text: bundled::C3_ALG.into(),
    };
    let broken = bundled::A2_SYM.replace("x1+ : z2 -> z1", "x1+ : z2 -> 2 z1");
    let sym = Input {
        name: "broken.sym".into(),
        text: broken,
    };
    let report = run_suite(Suite::Hopf, &[sym, c3], &small()).unwrap();
    assert_eq!(report.status, Status::Fail);
    let entry = report.entry("lie:[X1+,X1-]").unwrap();
    assert_eq!(entry.status, Status::Fail);
    assert!(entry
        .counterexample
        .as_deref()
        .unwrap()
        .contains("lhs = 2*z1"));
}

#[test]
fn json_is_deterministic_and_parses() {
    let a = run_suite(Suite::All, &[], &small())
        .unwrap()
        .emit(Format::Json);
    let b = run_suite(Suite::All, &[], &small())
        .unwrap()
        .emit(Format::Json);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert!(keys.contains(&"entries") && keys.contains(&"wall_time"));
    assert!(v["wall_time"].is_null());
    let ids: Vec<&str> = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["id"].as_str().unwrap())
        .collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}

#[test]
fn suite_names_parse() {
    assert_eq!("hopf".parse::<Suite>().unwrap(), Suite::Hopf);
    assert!(matches!("nope".parse::<Suite>(), Err(CliError::Usage(_))));
}
