use nwave::exprat::{q, qi};
use nwave::spectral::initial_config;
use nwave::verify::{dataset, grid, residual_identities, verify_config, verify_suite, Identity, Mode, Status};
use nwave::{model, Algebra, ExpPoly, ExpRational, LinForm, RootLabel};

#[test]
fn grid_has_nine_points() {
    let g = grid();
    assert_eq!(g.len(), 9);
    assert!(g.contains(&(q(1, 2), q(-1, 3))));
}

#[test]
fn initial_config_passes_in_both_modes() {
    let c = initial_config(&model(Algebra::B2), &dataset(0, 2, 3)).unwrap();
    for mode in [Mode::Exact, Mode::Numeric] {
        let r = verify_config(&c, mode);
        assert!(r.pass(), "{mode:?}");
        assert_eq!(r.checks.len(), 8);
    }
}

#[test]
fn perturbed_config_fails_with_named_equations() {
    let mut c = initial_config(&model(Algebra::A2), &dataset(0, 2, 2)).unwrap();
    let r10 = RootLabel::minus(1, 0);
    let bumped = &c.get(r10).clone() + &ExpRational::from(ExpPoly::term(qi(1), LinForm::new(qi(1), qi(0))));
    c.set(r10, bumped).unwrap();
    for mode in [Mode::Exact, Mode::Numeric] {
        let r = verify_config(&c, mode);
        assert!(!r.pass(), "{mode:?}");
        assert!(r.failed >= 1);
        let cex = r.counterexample.as_ref().expect("counterexample");
        assert_eq!(cex.sha256.len(), 64);
        assert!(cex.terms.len() <= 20);
        assert!(r.checks.iter().any(|ch| ch.status == Status::Fail && ch.name.starts_with("eq ")));
    }
}

#[test]
fn counterexample_is_truncated_to_twenty_terms() {
    let p = ExpPoly::from_terms((1..=30).map(|k| (qi(k), LinForm::new(qi(k), qi(0)))));
    let id = Identity::new("big", vec![ExpRational::from(p)]);
    let cex = nwave::verify::counterexample(&id.name, &id.sum(), None);
    assert_eq!(cex.total_terms, 30);
    assert_eq!(cex.terms.len(), 20);
    assert!(cex.terms[0].starts_with("30*"));
}

#[test]
fn residual_identities_split_into_parts() {
    let c = initial_config(&model(Algebra::G2), &dataset(0, 2, 3)).unwrap();
    let ids = residual_identities(&c);
    assert_eq!(ids.len(), 12);
    assert!(ids.iter().all(|i| i.parts.len() >= 2 && i.sum().is_zero()));
}

#[test]
fn verdicts_are_invariant_under_weight_rescaling() {
    for a in [Algebra::A2, Algebra::B2] {
        let s = dataset(0, 2, 3);
        let s3 = s.rescaled(&qi(3));
        let v = |s| nwave::tau::solution_from_tau(&model(a), s, 1, 1).map(|c| verify_config(&c, Mode::Exact).pass());
        assert_eq!(v(&s).unwrap(), v(&s3).unwrap(), "{a}");
        assert!(v(&s3).unwrap());
    }
}

#[test]
fn small_suites_pass() {
    for name in ["toda", "gra"] {
        let r = verify_suite(name, Mode::Exact).unwrap();
        assert!(r.pass(), "{name}");
        assert_eq!(r.schema, 1);
    }
    assert!(verify_suite("nope", Mode::Exact).is_err());
}

#[test]
fn report_json_has_schema_and_verdict() {
    let r = verify_suite("gra", Mode::Numeric).unwrap();
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["verdict"], "PASS");
    assert_eq!(v["mode"], "numeric");
}

#[test]
fn modes_parse() {
    assert_eq!("exact".parse::<Mode>().unwrap(), Mode::Exact);
    assert_eq!("numeric".parse::<Mode>().unwrap(), Mode::Numeric);
    assert!("fuzzy".parse::<Mode>().is_err());
}
