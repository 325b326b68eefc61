use std::sync::Arc;

use num::{BigInt, Zero};

use super::combination::same_presentation;
use super::{AlgebraError, BasisKey, Combination, DegreeVector, Element, GradedPresentation};
use crate::scalars::Scalar;

/// `λ^{n₁ᵃ n₂ᵇ}`, the phase of the graded star product of homogeneous
/// pieces of degrees `a` and `b`.
pub fn product_phase(a: &DegreeVector, b: &DegreeVector) -> Scalar {
    Scalar::lambda_pow(&a.n1 * &b.n2)
}

/// Exponent `Σ_{s<t} n₁(s)·n₂(t)` accumulated by multiplying factors of the
/// given degrees left to right with the graded star product.
pub fn ordering_exponent(degrees: &[DegreeVector]) -> BigInt {
    let mut seen_n1 = BigInt::zero();
    let mut k = BigInt::zero();
    for d in degrees {
        k += &seen_n1 * &d.n2;
        seen_n1 += &d.n1;
    }
    k
}

/// The quantization map `a ↦ ul a` from a presentation `A` to its graded
/// deformation `A_λ`.
///
/// Elements of `A_λ` are stored in the intrinsic normal-ordered basis of
/// the quantized presentation, where the basis word `[g₁⋯g_k]` is the
/// product `g₁ * ⋯ * g_k` in `A_λ`. Multiplying lifts of generators left to
/// right gives `[w] = λ^{e(w)} ul(w)` with `e` from [`ordering_exponent`],
/// so `ul(w) = λ^{-e(w)} [w]`.
#[derive(Clone, Debug)]
pub struct Quantization {
    source: Arc<GradedPresentation>,
    target: Arc<GradedPresentation>,
}

impl Quantization {
    pub fn new(source: &Arc<GradedPresentation>) -> Self {
        Self {
            source: source.clone(),
            target: Arc::new(source.quantize()),
        }
    }

    pub fn source(&self) -> &Arc<GradedPresentation> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GradedPresentation> {
        &self.target
    }

    fn check_source<K: BasisKey>(&self, a: &Combination<K>) -> Result<(), AlgebraError> {
        if same_presentation(a.presentation(), &self.source) {
            Ok(())
        } else {
            Err(AlgebraError::NotSource(a.presentation().name().to_string()))
        }
    }

    fn check_target<K: BasisKey>(&self, a: &Combination<K>) -> Result<(), AlgebraError> {
        if same_presentation(a.presentation(), &self.target) {
            Ok(())
        } else {
            Err(AlgebraError::NotTarget(a.presentation().name().to_string()))
        }
    }

    /// `ul a`.
    pub fn lift<K: BasisKey>(&self, a: &Combination<K>) -> Result<Combination<K>, AlgebraError> {
        self.check_source(a)?;
        let p = &self.source;
        Ok(Combination::from_terms(
            &self.target,
            a.terms().map(|(k, c)| {
                let e = ordering_exponent(&k.factor_degrees(p));
                (k.clone(), c.shift(&-e))
            }),
        ))
    }

    /// Inverse of [`Quantization::lift`].
    pub fn unlift<K: BasisKey>(&self, a: &Combination<K>) -> Result<Combination<K>, AlgebraError> {
        self.check_target(a)?;
        let p = &self.source;
        Ok(Combination::from_terms(
            p,
            a.terms().map(|(k, c)| {
                let e = ordering_exponent(&k.factor_degrees(p));
                (k.clone(), c.shift(&e))
            }),
        ))
    }

    /// `Σ λ^{n₁ᵃ n₂ᵇ} ul(a_p b_q)` over homogeneous parts, with `product` the
    /// undeformed multiplication of the source.
    pub fn deformed_product<K: BasisKey>(
        &self,
        a: &Combination<K>,
        b: &Combination<K>,
        product: impl Fn(&Combination<K>, &Combination<K>) -> Result<Combination<K>, AlgebraError>,
    ) -> Result<Combination<K>, AlgebraError> {
        self.check_source(a)?;
        self.check_source(b)?;
        let mut out = Combination::zero(&self.source);
        for (da, pa) in a.homogeneous_parts() {
            for (db, pb) in b.homogeneous_parts() {
                let ab = product(&pa, &pb)?;
                out = &out + &ab.scale(&product_phase(&da, &db));
            }
        }
        self.lift(&out)
    }

    /// `ul a * ul b` computed from the undeformed product of `a, b ∈ A`.
    pub fn star_product(&self, a: &Element, b: &Element) -> Result<Element, AlgebraError> {
        self.deformed_product(a, b, Element::multiply)
    }

    /// The deformed involution `(ul a)* = λ^{n₁ᵃn₂ᵃ} ul(a*)`, applied per
    /// homogeneous part of `a ∈ A_λ`.
    pub fn star_involution(&self, a: &Element) -> Result<Element, AlgebraError> {
        if !self.source.has_involution() {
            return Err(AlgebraError::NoInvolution(self.source.name().to_string()));
        }
        let classical = self.unlift(a)?;
        let mut out = Element::zero(&self.source);
        for (d, part) in classical.homogeneous_parts() {
            let starred = part.involution()?;
            out = &out + &starred.scale(&product_phase(&d, &d));
        }
        self.lift(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Generator, Word};

    fn torus() -> Quantization {
        let p = GradedPresentation::commutative(
            "T2",
            vec![
                Generator::new("u", 1, 0).with_star(2),
                Generator::new("v", 0, 1).with_star(3),
                Generator::new("U", -1, 0).with_star(0),
                Generator::new("V", 0, -1).with_star(1),
            ],
        )
        .unwrap();
        Quantization::new(&Arc::new(p))
    }

    fn gen(q: &Quantization, g: usize) -> Element {
        Element::generator(q.source(), g)
    }

    #[test]
    fn star_product_examples() {
        let q = torus();
        let (u, v) = (gen(&q, 0), gen(&q, 1));
        let uv = q.lift(&(&u * &v)).unwrap();
        assert_eq!(
            q.star_product(&u, &v).unwrap(),
            uv.scale(&Scalar::lambda_pow(1))
        );
        assert_eq!(q.star_product(&v, &u).unwrap(), uv);
        let one = Element::unit(q.source());
        assert_eq!(q.star_product(&u, &one).unwrap(), q.lift(&u).unwrap());
    }

    #[test]
    fn star_product_matches_intrinsic_product() {
        let q = torus();
        let (u, v) = (gen(&q, 0), gen(&q, 1));
        let intrinsic = q.lift(&u).unwrap().multiply(&q.lift(&v).unwrap()).unwrap();
        assert_eq!(q.star_product(&u, &v).unwrap(), intrinsic);
    }

    #[test]
    fn lift_round_trip() {
        let q = torus();
        let a = &(&gen(&q, 0) * &gen(&q, 1)) + &gen(&q, 3).pow(2);
        assert_eq!(q.unlift(&q.lift(&a).unwrap()).unwrap(), a);
        assert!(matches!(q.unlift(&a), Err(AlgebraError::NotTarget(_))));
    }

    #[test]
    fn deformed_involution_examples() {
        let q = torus();
        let (u, v) = (gen(&q, 0), gen(&q, 1));
        let ul_u = q.lift(&u).unwrap();
        assert_eq!(
            q.star_involution(&ul_u).unwrap(),
            q.lift(&gen(&q, 2)).unwrap()
        );
        let ul_uv = q.lift(&(&u * &v)).unwrap();
        let expected = q
            .lift(&(&gen(&q, 3) * &gen(&q, 2)))
            .unwrap()
            .scale(&Scalar::lambda_pow(1));
        let once = q.star_involution(&ul_uv).unwrap();
        assert_eq!(once, expected);
        assert_eq!(q.star_involution(&once).unwrap(), ul_uv);
    }

    #[test]
    fn involution_requires_pairing() {
        let p = GradedPresentation::commutative("T", vec![Generator::new("u", 1, 0)]).unwrap();
        let q = Quantization::new(&Arc::new(p));
        let a = q.lift(&Element::generator(q.source(), 0)).unwrap();
        assert!(matches!(
            q.star_involution(&a),
            Err(AlgebraError::NoInvolution(_))
        ));
    }

    #[test]
    fn ordering_exponent_of_word() {
        let q = torus();
        // u·v: n₁(u)·n₂(v) = 1
        let w = Word::from_sorted(4, &[0, 1]);
        assert_eq!(
            ordering_exponent(&w.factor_degrees(q.source())),
            BigInt::from(1)
        );
    }
}
