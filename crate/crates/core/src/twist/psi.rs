use std::collections::BTreeMap;

use num::BigInt;

use crate::algebra::{DegreeVector, Element};
use crate::scalars::{form_identity_check, DegreeForm, Scalar};

use super::{tensor, Tensor, TwistError};

/// Degree variables of the two tensor slots: `(p₁,p₂)` and `(q₁,q₂)`.
pub const PAIR_VARS: [&str; 4] = ["p1", "p2", "q1", "q2"];
/// Degree variables of three tensor slots.
pub const TRIPLE_VARS: [&str; 6] = ["p1", "p2", "q1", "q2", "r1", "r2"];

fn v(vars: &[&str], name: &str) -> DegreeForm {
    DegreeForm::var(vars, name).expect("name is in the variable list")
}

/// `Ψ` or `Ψ⁻¹`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Psi,
    Inverse,
}

/// An abelian twist `λ^{f(H⊗H)}` acting on homogeneous `a ⊗ b` of degrees
/// `p`, `q` by `λ^{f(p,q)}`; `f` is a form in `p₁,p₂,q₁,q₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Twist {
    exponent: DegreeForm,
}

impl Twist {
    pub fn new(exponent: DegreeForm) -> Result<Self, TwistError> {
        if let Some(bad) = exponent
            .vars()
            .iter()
            .find(|x| !PAIR_VARS.contains(&x.as_str()))
        {
            return Err(TwistError::TwistVariable(bad.clone()));
        }
        Ok(Self {
            exponent: exponent.substitute(&BTreeMap::new(), &PAIR_VARS),
        })
    }

    /// `Ψ = λ^{−H₁⊗H₂}`.
    pub fn cartan() -> Self {
        let f = -(&v(&PAIR_VARS, "p1") * &v(&PAIR_VARS, "q2"));
        Self { exponent: f }
    }

    pub fn trivial() -> Self {
        Self {
            exponent: DegreeForm::zero(&PAIR_VARS),
        }
    }

    pub fn exponent(&self) -> &DegreeForm {
        &self.exponent
    }

    pub fn inverse(&self) -> Self {
        Self {
            exponent: -&self.exponent,
        }
    }

    /// `Ψ*`: the Cartan generators are self-adjoint and `λ* = λ⁻¹`, so the
    /// exponent changes sign.
    pub fn star(&self) -> Self {
        Self {
            exponent: -&self.exponent,
        }
    }

    /// `Ψ₂₁`, the twist with its legs exchanged.
    pub fn flipped(&self) -> Self {
        let swap = BTreeMap::from([
            ("p1", v(&PAIR_VARS, "q1")),
            ("p2", v(&PAIR_VARS, "q2")),
            ("q1", v(&PAIR_VARS, "p1")),
            ("q2", v(&PAIR_VARS, "p2")),
        ]);
        Self {
            exponent: self.exponent.substitute(&swap, &PAIR_VARS),
        }
    }

    /// `R = Ψ₂₁Ψ⁻¹`, which satisfies `R·Δ_Ψ = Δ_Ψᵒᵖ·R`.
    pub fn r_matrix(&self) -> Self {
        Self {
            exponent: &self.flipped().exponent - &self.exponent,
        }
    }

    fn values(p: &DegreeVector, q: &DegreeVector) -> BTreeMap<String, BigInt> {
        BTreeMap::from([
            ("p1".to_string(), p.n1.clone()),
            ("p2".to_string(), p.n2.clone()),
            ("q1".to_string(), q.n1.clone()),
            ("q2".to_string(), q.n2.clone()),
        ])
    }

    /// `λ^{f(p,q)}`.
    pub fn phase(&self, p: &DegreeVector, q: &DegreeVector) -> Scalar {
        let k = self
            .exponent
            .evaluate(&Self::values(p, q))
            .expect("all pair variables bound");
        Scalar::lambda_pow(k)
    }

    /// The twist acting on a two-fold tensor.
    pub fn apply(&self, t: &Tensor) -> Result<Tensor, TwistError> {
        let p = t.presentation().clone();
        let mut out = Tensor::zero(&p);
        for (key, c) in t.terms() {
            if key.arity() != 2 {
                return Err(TwistError::ArityMismatch {
                    expected: 2,
                    found: key.arity(),
                });
            }
            let d = key.slot_degrees(&p);
            out.add_term(key.clone(), c * &self.phase(&d[0], &d[1]));
        }
        Ok(out)
    }

    /// `Ψ ▷ (a ⊗ b)` or `Ψ⁻¹ ▷ (a ⊗ b)`.
    pub fn psi_apply(&self, side: Side, a: &Element, b: &Element) -> Result<Tensor, TwistError> {
        let t = tensor(&[a.clone(), b.clone()])?;
        match side {
            Side::Psi => self.apply(&t),
            Side::Inverse => self.inverse().apply(&t),
        }
    }

    /// Exponents of `Ψ₁₂(Δ⊗id)Ψ` and `Ψ₂₃(id⊗Δ)Ψ` on homogeneous
    /// `a⊗b⊗c` of degrees `p, q, r`: `f(p,q) + f(p+q,r)` and
    /// `f(q,r) + f(p,q+r)`. The coproduct of a Cartan generator is primitive,
    /// so `Δ⊗id` adds the degrees of the first two slots.
    pub fn cocycle_sides(&self) -> (DegreeForm, DegreeForm) {
        let t = |n: &str| v(&TRIPLE_VARS, n);
        let at = |a: [DegreeForm; 2], b: [DegreeForm; 2]| {
            let [a1, a2] = a;
            let [b1, b2] = b;
            let map = BTreeMap::from([("p1", a1), ("p2", a2), ("q1", b1), ("q2", b2)]);
            self.exponent.substitute(&map, &TRIPLE_VARS)
        };
        let p = || [t("p1"), t("p2")];
        let q = || [t("q1"), t("q2")];
        let r = || [t("r1"), t("r2")];
        let pq = [&t("p1") + &t("q1"), &t("p2") + &t("q2")];
        let qr = [&t("q1") + &t("r1"), &t("q2") + &t("r2")];
        let left = &at(p(), q()) + &at(pq, r());
        let right = &at(q(), r()) + &at(p(), qr);
        (left, right)
    }

    /// The cocycle condition as an exact polynomial identity in the slot
    /// degrees, hence valid for every degree.
    pub fn check_cocycle(&self) -> bool {
        let (l, r) = self.cocycle_sides();
        form_identity_check(&l, &r).expect("both sides built over the same variables")
    }

    /// `(ε⊗id)Ψ = 1 = (id⊗ε)Ψ`: the counit sees degree zero in its slot.
    pub fn check_counit(&self) -> bool {
        let zero = DegreeForm::zero(&PAIR_VARS);
        let kill = |a: &str, b: &str| {
            let map = BTreeMap::from([(a, zero.clone()), (b, zero.clone())]);
            self.exponent.substitute(&map, &PAIR_VARS).is_zero()
        };
        kill("p1", "p2") && kill("q1", "q2")
    }

    /// `Ψ* = Ψ⁻¹` as a form identity.
    pub fn check_unitary(&self) -> bool {
        form_identity_check(self.star().exponent(), self.inverse().exponent())
            .expect("same variables")
    }
}
