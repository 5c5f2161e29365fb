use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use super::*;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn golden_ring(rank: usize) -> Arc<PolyRing> {
    PolyRing::new(NumberField::golden(), rank)
}

fn rat_ring(rank: usize) -> Arc<PolyRing> {
    PolyRing::new(NumberField::rational(), rank)
}

fn p(ring: &Arc<PolyRing>, s: &str) -> MultiPoly {
    parse_poly(ring, s).unwrap()
}

#[test]
fn rho_squared_reduces() {
    let r = golden_ring(2);
    let rho = MultiPoly::generator(&r);
    assert_eq!((&rho * &rho).render(), "rho + 1");
}

#[test]
fn additive_inverse_is_empty() {
    let r = rat_ring(2);
    let a1 = MultiPoly::alpha(&r, 1);
    let z = &a1 + &(&MultiPoly::from_int(&r, -1) * &a1);
    assert!(z.is_zero());
    assert_eq!(z.num_terms(), 0);
    assert_eq!(z.render(), "0");
}

#[test]
fn difference_of_squares() {
    let r = rat_ring(2);
    let f = &p(&r, "a1 + a2") * &p(&r, "a1 - a2");
    assert_eq!(f.render(), "a1^2 - a2^2");
}

#[test]
fn exact_div_linear_cases() {
    let r = rat_ring(2);
    assert_eq!(p(&r, "a1^2 + a1*a2").exact_div_linear(1).unwrap(), p(&r, "a1 + a2"));
    assert!(MultiPoly::zero(&r).exact_div_linear(1).unwrap().is_zero());
    assert_eq!(p(&r, "a2").exact_div_linear(1), Err(crate::LrcError::NotDivisible(1)));
}

#[test]
fn mixed_rings_are_rejected() {
    let f = MultiPoly::alpha(&rat_ring(2), 1);
    let g = MultiPoly::alpha(&golden_ring(2), 1);
    assert_eq!(f.checked_add(&g), Err(crate::LrcError::MixedRing));
    assert_eq!(f.checked_mul(&g), Err(crate::LrcError::MixedRing));
}

#[test]
fn scalar_signs() {
    let k = NumberField::golden();
    let rho = k.generator();
    assert_eq!(k.sign(&k.sub(&rho, &k.one())), Sign::Positive);
    assert_eq!(k.sign(&k.zero()), Sign::Zero);
    assert_eq!(k.sign(&k.from_rational(q(-3, 2))), Sign::Negative);
}

#[test]
fn nonneg_check() {
    let r = golden_ring(2);
    assert!(p(&r, "a1 + rho*a2").is_coefficientwise_nonneg());
    assert!(!p(&r, "a1 - a2").is_coefficientwise_nonneg());
    assert!(MultiPoly::zero(&r).is_coefficientwise_nonneg());
    assert!(!p(&r, "(1 - rho)*a1").is_coefficientwise_nonneg());
}

#[test]
fn substitute_t_cases() {
    let r = golden_ring(1);
    let k = r.field().clone();
    assert_eq!(p(&r, "(t + 1)*a1").substitute_t(&k.zero()), p(&r, "a1"));
    assert_eq!(p(&r, "t^2 + 2*t").substitute_t(&k.one()), p(&r, "3"));
    assert_eq!(p(&r, "a1*t").substitute_t(&k.generator()), p(&r, "rho*a1"));
}

#[test]
fn exact_div_multivariate() {
    let r = rat_ring(2);
    let f = p(&r, "(a*b - 2)*(a*b - 1)");
    assert_eq!(f.exact_div(&p(&r, "a*b - 1")).unwrap(), p(&r, "a*b - 2"));
    assert!(matches!(f.exact_div(&p(&r, "a")), Err(crate::LrcError::InexactDivision(_))));
    assert_eq!(f.exact_div(&MultiPoly::zero(&r)), Err(crate::LrcError::DivisionByZero));
}

#[test]
fn render_forms() {
    let r = golden_ring(3);
    assert_eq!(p(&r, "(2*rho - 1)*a1").render(), "(2*rho - 1)*a1");
    assert_eq!(p(&r, "-rho*a2 + a1").render(), "a1 - rho*a2");
    assert_eq!(p(&r, "a1^2*a2*t + 3/2").render(), "a1^2*a2*t + 3/2");
    assert_eq!(p(&r, "-(a + b)").render(), "-a - b");
    assert_eq!(p(&r, "rho^2").render(), "rho + 1");
}

#[test]
fn parse_errors() {
    let r = rat_ring(2);
    assert!(parse_poly(&r, "a3").is_err());
    assert!(parse_poly(&r, "a1 / a2").is_err());
    assert!(parse_poly(&r, "a1 +").is_err());
    assert!(parse_poly(&r, "").is_err());
    assert!(parse_poly(&r, "rho").is_err());
    assert!(parse_poly(&r, "(a1").is_err());
}

#[test]
fn grlex_order_is_graded() {
    let r = rat_ring(2);
    let f = p(&r, "1 + a2 + a1 + a1*a2 + a2^2 + a1^2");
    assert_eq!(f.render(), "a1^2 + a1*a2 + a2^2 + a1 + a2 + 1");
}

fn arb_scalar(deg: usize) -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-4i64..5, 1i64..4), deg)
}

fn arb_poly(ring: Arc<PolyRing>) -> impl Strategy<Value = MultiPoly> {
    let n = ring.nvars();
    let d = ring.field().degree();
    prop::collection::vec((prop::collection::vec(0u16..3, n), arb_scalar(d)), 0..5).prop_map(move |terms| {
        let k = ring.field();
        MultiPoly::from_terms(
            &ring,
            terms
                .into_iter()
                .map(|(e, c)| (Monomial::from_exponents(e), k.from_coords(c.into_iter().map(|(a, b)| q(a, b)).collect()))),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(
        f in arb_poly(golden_ring(2)),
        g in arb_poly(golden_ring(2)),
        h in arb_poly(golden_ring(2)),
    ) {
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f + &g, &g + &f);
    }

    #[test]
    fn div_linear_inverts_mul(f in arb_poly(golden_ring(3)), i in 1usize..4) {
        let r = f.ring().clone();
        let g = &f * &MultiPoly::alpha(&r, i);
        prop_assert_eq!(g.exact_div_linear(i).unwrap(), f);
    }

    #[test]
    fn exact_div_inverts_mul(f in arb_poly(rat_ring(2)), g in arb_poly(rat_ring(2))) {
        prop_assume!(!g.is_zero());
        prop_assert_eq!((&f * &g).exact_div(&g).unwrap(), f);
    }

    #[test]
    fn sign_is_multiplicative(a in arb_scalar(2), b in arb_scalar(2)) {
        let k = NumberField::golden();
        let x = k.from_coords(a.into_iter().map(|(n, d)| q(n, d)).collect());
        let y = k.from_coords(b.into_iter().map(|(n, d)| q(n, d)).collect());
        prop_assert_eq!(k.sign(&x) * k.sign(&y), k.sign(&k.mul(&x, &y)));
    }

    #[test]
    fn render_parse_round_trip(f in arb_poly(golden_ring(3))) {
        let text = f.render();
        prop_assert_eq!(parse_poly(f.ring(), &text).unwrap(), f);
    }
}
