use nwave::exprat::qi;
use nwave::spectral::initial_config;
use nwave::toda::{ab_closed, ab_step, ab_zero, background_chain, det_bareiss, det_cofactor, det_integral_form, first_root_chain, toda_residual};
use nwave::transforms::{apply_chain, TransformId};
use nwave::verify::dataset;
use nwave::{model, Algebra, ExpPoly, ExpRational, LinForm};

fn c(n: i64) -> ExpPoly {
    ExpPoly::constant(qi(n))
}

#[test]
fn determinants_of_constant_matrices() {
    let m = vec![vec![c(2), c(1), c(0)], vec![c(1), c(3), c(1)], vec![c(0), c(1), c(4)]];
    assert_eq!(det_bareiss(&m), c(18));
    assert_eq!(det_cofactor(&m), c(18));
    assert_eq!(det_bareiss(&[]), ExpPoly::one());
    // a zero leading entry forces a row swap
    let p = vec![vec![c(0), c(1)], vec![c(1), c(0)]];
    assert_eq!(det_bareiss(&p), c(-1));
    let sing = vec![vec![c(1), c(2)], vec![c(2), c(4)]];
    assert!(det_bareiss(&sing).is_zero());
}

#[test]
fn bareiss_matches_cofactor_on_exponentials() {
    let e = |a: i64, b: i64| ExpPoly::term(qi(1), LinForm::new(qi(a), qi(b)));
    let m = vec![
        vec![&e(1, 0) + &c(1), e(0, 1), c(2)],
        vec![e(1, 1), &e(2, 0) - &c(3), e(-1, 0)],
        vec![c(1), e(0, -1), &e(1, 1) + &e(0, 2)],
    ];
    assert_eq!(det_bareiss(&m), det_cofactor(&m));
}

#[test]
fn toda_relation_and_integral_form() {
    let s = dataset(2, 1, 5);
    let mut chain = background_chain(&s);
    assert!(chain.det_n(-1).is_zero());
    assert_eq!(chain.det_n(0), ExpPoly::one());
    for n in 1..=3 {
        assert!(toda_residual(&mut chain, n).unwrap().is_zero(), "n={n}");
    }
    for n in 0..=3 {
        assert_eq!(chain.det_n(n), det_integral_form(&s, n), "n={n}");
    }
    // beyond the spike count the minors vanish
    assert!(chain.det_n(6).is_zero());
}

#[test]
fn ab_chain_reproduces_closed_forms() {
    let s = dataset(1, 1, 6);
    let mut chain = background_chain(&s);
    let mut cur = ab_zero(&s);
    for n in 1..=2 {
        cur = ab_step(&cur, &mut chain).unwrap();
        let (a, b) = ab_closed(&s, n);
        assert_eq!(cur.a, ExpRational::from(a), "A^{n}");
        assert_eq!(cur.b, ExpRational::from(b), "B^{n}");
    }
}

#[test]
fn first_root_chain_matches_t10_powers() {
    let i = initial_config(&model(Algebra::B2), &dataset(1, 2, 2)).unwrap();
    for n in 1..=2 {
        let t = apply_chain(&vec![TransformId::B2T10; n], &i).unwrap();
        assert_eq!(first_root_chain(&i, n).unwrap(), t, "n={n}");
    }
}

#[test]
fn first_root_chain_requires_b2_background() {
    let a2 = initial_config(&model(Algebra::A2), &dataset(0, 1, 1)).unwrap();
    assert!(first_root_chain(&a2, 1).is_err());
}
