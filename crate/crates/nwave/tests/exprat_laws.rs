//! Exact algebraic laws of the exponential-polynomial field.

use nwave::exprat::{q, qi};
use nwave::{ExpPoly, ExpRational, LinForm, WaveConstants, Q};
use proptest::prelude::*;

fn small_q() -> impl Strategy<Value = Q> {
    (-4i64..=4, prop_oneof![Just(1i64), Just(2), Just(3)]).prop_map(|(n, d)| q(n, d))
}

fn exponent() -> impl Strategy<Value = LinForm> {
    let a = prop_oneof![Just(q(-1, 1)), Just(qi(0)), Just(q(1, 2)), Just(qi(1)), Just(qi(2))];
    let b = prop_oneof![Just(q(-1, 3)), Just(qi(0)), Just(qi(1)), Just(q(-3, 2))];
    (a, b).prop_map(|(a, b)| LinForm::new(a, b))
}

fn poly(max_terms: usize) -> impl Strategy<Value = ExpPoly> {
    prop::collection::vec((small_q(), exponent()), 0..=max_terms).prop_map(ExpPoly::from_terms)
}

fn nonzero_poly(max_terms: usize) -> impl Strategy<Value = ExpPoly> {
    poly(max_terms).prop_filter("nonzero", |p| !p.is_zero())
}

fn ratio() -> impl Strategy<Value = ExpRational> {
    (poly(3), nonzero_poly(2)).prop_map(|(n, d)| ExpRational::new(n, d).expect("nonzero denominator"))
}

fn constants() -> WaveConstants {
    WaveConstants::new(qi(1), q(1, 2), q(1, 3), qi(1)).unwrap()
}

fn index() -> impl Strategy<Value = (i64, i64)> {
    (-2i64..=3, -2i64..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    #[allow(clippy::eq_op)]
    fn ring_axioms(f in ratio(), g in ratio(), h in ratio()) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f + &ExpRational::zero(), f.clone());
        prop_assert_eq!(&f * &ExpRational::one(), f.clone());
        prop_assert!((&f - &f).is_zero());
        prop_assert!((&f + &(-&f)).is_zero());
    }

    #[test]
    fn leibniz_rule(f in ratio(), g in ratio(), (i, j) in index()) {
        let w = constants();
        let lhs = (&f * &g).deriv(i, j, &w);
        let rhs = &(&f.deriv(i, j, &w) * &g) + &(&f * &g.deriv(i, j, &w));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn derivative_linear_in_index(f in ratio(), (i, j) in index(), (k, l) in index()) {
        let w = constants();
        let lhs = f.deriv(i + k, j + l, &w);
        let rhs = &f.deriv(i, j, &w) + &f.deriv(k, l, &w);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn canonical_form_is_unique(n in poly(3), d in nonzero_poly(2), m in nonzero_poly(2)) {
        // Multiplying through by a common factor never changes the representation.
        let a = ExpRational::new(n.clone(), d.clone()).unwrap();
        let b = ExpRational::new(&n * &m, &d * &m).unwrap();
        prop_assert_eq!(a.num(), b.num());
        prop_assert_eq!(a.den(), b.den());
        for (t, x) in [(q(1, 2), q(-1, 3)), (qi(0), qi(0)), (q(-1, 4), q(2, 3)), (q(1, 3), qi(1)), (qi(-1), q(1, 5))] {
            // the reduced form agrees with the unreduced quotient wherever both are defined
            let (nv, dv) = ((&n * &m).eval(&t, &x), (&d * &m).eval(&t, &x));
            if let (Ok(u), true) = (a.eval(&t, &x), dv.abs() > 1e-3) {
                let v = nv / dv;
                prop_assert!((u - v).abs() <= 1e-9 * u.abs().max(v.abs()).max(1.0));
            }
        }
        if let Some((e, c)) = a.den().least_term() {
            prop_assert!(e.is_zero());
            prop_assert_eq!(c.clone(), qi(1));
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(f in poly(3), g in poly(3)) {
        let (t, x) = (q(1, 2), q(-1, 3));
        let (ff, gg) = (ExpRational::from(f.clone()), ExpRational::from(g.clone()));
        let (a, b) = (ff.eval(&t, &x).unwrap(), gg.eval(&t, &x).unwrap());
        let s = (&ff + &gg).eval(&t, &x).unwrap();
        let p = (&ff * &gg).eval(&t, &x).unwrap();
        let scale = 1.0 + a.abs() + b.abs() + (a * b).abs();
        prop_assert!((s - (a + b)).abs() <= 1e-12 * scale);
        prop_assert!((p - a * b).abs() <= 1e-12 * scale);
    }
}

#[test]
fn log_derivative_of_product_is_additive() {
    let w = constants();
    let f = ExpRational::from(ExpPoly::from_terms([(qi(1), LinForm::zero()), (qi(2), LinForm::new(qi(1), qi(1)))]));
    let g = ExpRational::from(ExpPoly::from_terms([
        (qi(3), LinForm::new(q(1, 2), qi(0))),
        (qi(-1), LinForm::new(qi(0), qi(-1))),
    ]));
    let lhs = (&f * &g).log_deriv(1, 1, &w).unwrap();
    let rhs = &f.log_deriv(1, 1, &w).unwrap() + &g.log_deriv(1, 1, &w).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn division_by_zero_is_reported() {
    assert!(ExpRational::new(ExpPoly::one(), ExpPoly::zero()).is_err());
    assert!(ExpRational::zero().recip().is_err());
    assert!(ExpRational::zero().log_deriv(1, 0, &constants()).is_err());
}

#[test]
fn pole_is_reported() {
    // 1 / (e^t − 1) at t = 0
    let den = &ExpPoly::term(qi(1), LinForm::new(qi(1), qi(0))) - &ExpPoly::one();
    let f = ExpRational::new(ExpPoly::one(), den).unwrap();
    assert!(matches!(f.eval(&qi(0), &qi(5)), Err(nwave::Error::EvalPole { .. })));
    assert!(f.eval(&qi(1), &qi(0)).is_ok());
}
