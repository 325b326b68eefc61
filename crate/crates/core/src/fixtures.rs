//! Bundled example algebras and symmetries, built programmatically.
//!
//! * `T2`: functions on the 2-torus, `u, v` of degrees `(1,0), (0,1)` with
//!   conjugates `U = u*`, `V = v*`.
//! * `C3`: polynomials in `z₁, z₂, z₃` and their conjugates `w₁, w₂, w₃`,
//!   graded by the `sl₃` weights `(1,0), (−1,1), (0,−1)`.
//! * `A2` on `C3`: the defining representation of `sl₃` by the vector
//!   fields `Σ M_{ab}(z_a∂_{z_b} − w_b∂_{w_a})`, compatible with the compact
//!   star structure `(xᵢ^±)* = xᵢ^∓`.

use std::sync::Arc;

use crate::algebra::{Element, Generator, GradedPresentation};
use crate::scalars::Scalar;
use crate::symmetry::{ActionRule, CartanData, GeneratorAction, Sign};

pub fn t2() -> Arc<GradedPresentation> {
    Arc::new(
        GradedPresentation::commutative(
            "T2",
            vec![
                Generator::new("u", 1, 0).with_star(2),
                Generator::new("v", 0, 1).with_star(3),
                Generator::new("U", -1, 0).with_star(0),
                Generator::new("V", 0, -1).with_star(1),
            ],
        )
        .expect("T2 fixture is valid"),
    )
}

pub fn c3() -> Arc<GradedPresentation> {
    Arc::new(
        GradedPresentation::commutative(
            "C3",
            vec![
                Generator::new("z1", 1, 0).with_star(3),
                Generator::new("z2", -1, 1).with_star(4),
                Generator::new("z3", 0, -1).with_star(5),
                Generator::new("w1", -1, 0).with_star(0),
                Generator::new("w2", 1, -1).with_star(1),
                Generator::new("w3", 0, 1).with_star(2),
            ],
        )
        .expect("C3 fixture is valid"),
    )
}

/// `(index, sign, source, target, coefficient)` for the `A2` fixture.
const A2_RULES: [(usize, Sign, &str, &str, i64); 8] = [
    (0, Sign::Plus, "z2", "z1", 1),
    (0, Sign::Plus, "w1", "w2", -1),
    (0, Sign::Minus, "z1", "z2", 1),
    (0, Sign::Minus, "w2", "w1", -1),
    (1, Sign::Plus, "z3", "z2", 1),
    (1, Sign::Plus, "w2", "w3", -1),
    (1, Sign::Minus, "z2", "z3", 1),
    (1, Sign::Minus, "w3", "w2", -1),
];

pub fn a2_on(p: &Arc<GradedPresentation>) -> GeneratorAction {
    let rules = A2_RULES
        .iter()
        .map(|&(index, sign, from, to, c)| ActionRule {
            index,
            sign,
            generator: p.generator_index(from).expect("fixture generator"),
            image: Element::generator_named(p, to)
                .expect("fixture generator")
                .scale(&Scalar::from_integer(c)),
        });
    GeneratorAction::new(CartanData::a2(), p, rules).expect("A2 fixture is valid")
}

pub fn a2_on_c3() -> GeneratorAction {
    a2_on(&c3())
}

/// The torus symmetry of `T2`: only the two Cartan generators.
pub fn torus_symmetry(p: &Arc<GradedPresentation>) -> GeneratorAction {
    GeneratorAction::new(CartanData::a2(), p, []).expect("empty action is valid")
}
