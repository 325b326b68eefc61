use std::sync::Arc;

use crate::check::{check_samples, mismatch, CheckEntry};

use super::{Element, GradedPresentation, Quantization};

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// `(ab)c = a(bc)` under the intrinsic multiplication of `p`.
pub fn check_associativity(p: &Arc<GradedPresentation>, triples: &[Vec<Element>]) -> CheckEntry {
    check_samples(format!("algebra:assoc:{}", p.name()), triples, |x| {
        let (a, b, c) = (&x[0], &x[1], &x[2]);
        let lhs = a.multiply(b).and_then(|ab| ab.multiply(c)).map_err(err)?;
        let rhs = b.multiply(c).and_then(|bc| a.multiply(&bc)).map_err(err)?;
        Ok(mismatch(&format!("on {a}, {b}, {c}"), &lhs, &rhs))
    })
}

/// `(a ⋆ b) ⋆ c = a ⋆ (b ⋆ c)` for the star product computed entirely on
/// the undeformed side from degree phases.
pub fn check_star_associativity(q: &Quantization, triples: &[Vec<Element>]) -> CheckEntry {
    let star = |a: &Element, b: &Element| {
        q.star_product(a, b)
            .and_then(|ab| q.unlift(&ab))
            .map_err(err)
    };
    check_samples(
        format!("algebra:star-assoc:{}", q.source().name()),
        triples,
        |x| {
            let (a, b, c) = (&x[0], &x[1], &x[2]);
            let lhs = star(&star(a, b)?, c)?;
            let rhs = star(a, &star(b, c)?)?;
            Ok(mismatch(&format!("on {a}, {b}, {c}"), &lhs, &rhs))
        },
    )
}

/// The star product equals intrinsic multiplication in the quantized
/// presentation: `ul a ⋆ ul b = ul a · ul b`.
pub fn check_star_product(q: &Quantization, pairs: &[Vec<Element>]) -> CheckEntry {
    check_samples(
        format!("algebra:star-oracle:{}", q.source().name()),
        pairs,
        |x| {
            let (a, b) = (&x[0], &x[1]);
            let lhs = q.star_product(a, b).map_err(err)?;
            let rhs = q
                .lift(a)
                .and_then(|ua| ua.multiply(&q.lift(b)?))
                .map_err(err)?;
            Ok(mismatch(&format!("on {a}, {b}"), &lhs, &rhs))
        },
    )
}

/// The deformed involution is an antilinear involution and is
/// anti-multiplicative. It is not, in general, the generator pairing of the
/// quantized presentation: a generator of degree `(n₁,n₂)` picks up
/// `λ^{n₁n₂}`.
pub fn check_involution(q: &Quantization, pairs: &[Vec<Element>]) -> Vec<CheckEntry> {
    let name = q.source().name();
    if !q.source().has_involution() {
        return Vec::new();
    }
    let i = crate::scalars::Scalar::i();
    vec![
        check_samples(format!("algebra:involution:{name}"), pairs, |x| {
            let a = q.lift(&x[0]).map_err(err)?;
            let star = q.star_involution(&a).map_err(err)?;
            let twice = q.star_involution(&star).map_err(err)?;
            let scaled = q.star_involution(&a.scale(&i)).map_err(err)?;
            Ok(mismatch(&format!("((ul {})*)*", x[0]), &twice, &a)
                .or_else(|| mismatch(&format!("(i ul {})*", x[0]), &scaled, &star.scale(&-&i))))
        }),
        check_samples(format!("algebra:anti-multiplicative:{name}"), pairs, |x| {
            let (a, b) = (q.lift(&x[0]).map_err(err)?, q.lift(&x[1]).map_err(err)?);
            let lhs = a
                .multiply(&b)
                .and_then(|ab| q.star_involution(&ab))
                .map_err(err)?;
            let rhs = q
                .star_involution(&b)
                .and_then(|sb| sb.multiply(&q.star_involution(&a)?))
                .map_err(err)?;
            Ok(mismatch(&format!("(({a})({b}))*"), &lhs, &rhs))
        }),
    ]
}
