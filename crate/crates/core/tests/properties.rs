use std::sync::Arc;

use isotwist::algebra::{Element, Generator, GradedPresentation, Quantization, Word};
use isotwist::cli::{parse_expression, parse_presentation, render_presentation, PresentationFile};
use isotwist::fixtures;
use isotwist::scalars::{gaussian, Scalar};
use num::BigInt;
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Scalar> {
    prop::collection::vec((-4i64..=4, -4i64..=4, -3i64..=3), 0..4).prop_map(|terms| {
        let mut s = Scalar::zero();
        for (re, im, k) in terms {
            s += &Scalar::monomial(gaussian(re, im), k);
        }
        s
    })
}

fn element(p: Arc<GradedPresentation>, max_exp: u32) -> impl Strategy<Value = Element> {
    let n = p.len();
    prop::collection::vec((prop::collection::vec(0..=max_exp, n), scalar()), 0..4).prop_map(move |terms| {
        let mut e = Element::zero(&p);
        for (exps, c) in terms {
            e.add_term(Word::from_exponents(exps), c);
        }
        e
    })
}

fn quantized_c3() -> Arc<GradedPresentation> {
    Arc::new(fixtures::c3().quantize())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Scalar::one(), a.clone());
    }

    #[test]
    fn scalar_conjugation(a in scalar(), b in scalar()) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
    }

    #[test]
    fn deformed_multiplication_is_associative(
        (a, b, c) in (element(quantized_c3(), 2), element(quantized_c3(), 2), element(quantized_c3(), 2))
    ) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn lift_is_a_bijection(a in element(fixtures::t2(), 3)) {
        let q = Quantization::new(&fixtures::t2());
        prop_assert_eq!(q.unlift(&q.lift(&a).unwrap()).unwrap(), a);
    }

    #[test]
    fn star_product_matches_deformed_multiplication(a in element(fixtures::c3(), 2), b in element(fixtures::c3(), 2)) {
        let q = Quantization::new(&fixtures::c3());
        let lhs = q.star_product(&a, &b).unwrap();
        let rhs = &q.lift(&a).unwrap() * &q.lift(&b).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rendered_elements_parse_back(a in element(quantized_c3(), 3)) {
        let p = quantized_c3();
        let text = a.to_string();
        let back = parse_expression(&text, &p).unwrap();
        prop_assert_eq!(back, a, "{}", text);
    }

    #[test]
    fn presentation_files_round_trip(
        degrees in prop::collection::vec((-3i64..=3, -3i64..=3), 1..5),
        upper in prop::collection::vec(-3i64..=3, 10),
        deformed in any::<bool>(),
    ) {
        let n = degrees.len();
        let generators: Vec<Generator> =
            degrees.iter().enumerate().map(|(k, &(a, b))| Generator::new(&format!("g{k}"), a, b)).collect();
        let mut c = vec![vec![BigInt::from(0); n]; n];
        let mut it = upper.iter();
        for i in 0..n {
            for j in 0..i {
                let v = BigInt::from(*it.next().unwrap());
                c[j][i] = -&v;
                c[i][j] = v;
            }
        }
        let p = GradedPresentation::new("P", generators, c).unwrap();
        let file = PresentationFile { source: Arc::new(p), deformed };
        let text = render_presentation(&file);
        prop_assert_eq!(parse_presentation(&text).unwrap(), file);
    }
}
