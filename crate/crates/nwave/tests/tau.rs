use nwave::exprat::{q, qi};
use nwave::spectral::{initial_config, SpectralData, Spike};
use nwave::tau::{check_gra, solution_from_tau, tau_u, vandermonde_sq};
use nwave::verify::dataset;
use nwave::wavesys::failing_equations;
use nwave::{model, Algebra, Error, ExpPoly, LinForm, RootLabel, WaveConstants};

fn single(p: (i64, i64), qq: (i64, i64)) -> SpectralData {
    let w = WaveConstants::new(qi(1), q(1, 2), q(1, 3), qi(1)).unwrap();
    SpectralData::new(w, vec![Spike::new(qi(p.0), qi(p.1))], vec![Spike::new(qi(qq.0), qi(qq.1))]).unwrap()
}

#[test]
fn vandermonde_examples() {
    assert_eq!(vandermonde_sq(&[]), qi(1));
    assert_eq!(vandermonde_sq(&[qi(3)]), qi(1));
    assert_eq!(vandermonde_sq(&[qi(1), qi(3)]), qi(4));
    assert_eq!(vandermonde_sq(&[qi(0), qi(1), qi(3)]), qi(36));
    assert_eq!(vandermonde_sq(&[qi(2), qi(2)]), qi(0));
}

#[test]
fn single_spike_tau_is_the_exponential() {
    let s = single((2, 5), (1, 1));
    let u10 = tau_u(&s, 1, 0);
    let e = s.constants.root_form(1).scaled(&qi(2));
    assert_eq!(u10, ExpPoly::term(qi(5), e));
    assert_eq!(tau_u(&s, 0, 0), ExpPoly::one());
    assert!(tau_u(&s, 2, 0).is_zero());
}

#[test]
fn invalid_spectral_data_is_rejected() {
    let w = WaveConstants::new(qi(1), q(1, 2), q(1, 3), qi(1)).unwrap();
    let sp = |p: i64, wt: i64| Spike::new(qi(p), qi(wt));
    assert!(matches!(
        SpectralData::new(w.clone(), vec![sp(1, 1), sp(1, 2)], vec![]),
        Err(Error::InvalidSpectralData(_))
    ));
    assert!(matches!(
        SpectralData::new(w.clone(), vec![sp(1, 0)], vec![]),
        Err(Error::InvalidSpectralData(_))
    ));
    assert!(matches!(
        SpectralData::new(w, vec![sp(1, 1)], vec![sp(1, 1)]),
        Err(Error::InvalidSpectralData(_))
    ));
    assert!(WaveConstants::new(qi(1), qi(2), qi(1), qi(2)).is_err());
}

#[test]
fn initial_configs_solve_every_system() {
    for a in [Algebra::A2, Algebra::B2, Algebra::G2] {
        let c = initial_config(&model(a), &dataset(1, 2, 3)).unwrap();
        assert!(failing_equations(&c).is_empty(), "{a}");
        for (r, v) in c.fields() {
            if r.sign == nwave::wavesys::Sign::Plus {
                assert!(v.is_zero());
            }
        }
    }
}

#[test]
fn tau_order_zero_is_the_initial_config() {
    for a in [Algebra::A2, Algebra::B2, Algebra::G2] {
        let s = dataset(0, 2, 3);
        assert_eq!(solution_from_tau(&model(a), &s, 0, 0).unwrap(), initial_config(&model(a), &s).unwrap(), "{a}");
    }
}

#[test]
fn a2_chain_interruption() {
    let s = single((2, 1), (1, 1));
    let c = solution_from_tau(&model(Algebra::A2), &s, 1, 1).unwrap();
    for r in ["-1.0", "-0.1", "-1.1"] {
        assert!(c.get(RootLabel::parse(r).unwrap()).is_zero(), "{r}");
    }
    assert!(failing_equations(&c).is_empty());
    assert!(matches!(solution_from_tau(&model(Algebra::A2), &s, 2, 0), Err(Error::TauZero(_))));
}

#[test]
fn a2_tau_solutions_pass() {
    let s = dataset(2, 2, 2);
    for n1 in 0..=2 {
        for n2 in 0..=2 {
            let c = solution_from_tau(&model(Algebra::A2), &s, n1, n2).unwrap();
            assert!(failing_equations(&c).is_empty(), "({n1},{n2})");
        }
    }
}

#[test]
fn b2_tau_solutions_pass() {
    let s = dataset(1, 2, 4);
    for (n1, n2) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
        let c = solution_from_tau(&model(Algebra::B2), &s, n1, n2).unwrap();
        assert!(failing_equations(&c).is_empty(), "({n1},{n2})");
    }
}

#[test]
fn negative_orders_are_input_errors() {
    let s = single((2, 1), (1, 1));
    assert!(matches!(solution_from_tau(&model(Algebra::A2), &s, -1, 0), Err(Error::Input(_))));
}

#[test]
fn gra_holds_and_needs_enough_spikes() {
    let s = dataset(1, 2, 4);
    assert!(check_gra(&s, 0));
    assert!(check_gra(&s, 1));
    assert!(!check_gra(&dataset(1, 2, 2), 1));
}

#[test]
fn exponent_forms_are_rational_linear() {
    let s = single((3, 1), (1, 1));
    let e = s.constants.root_form(2);
    assert_eq!(e, LinForm::new(qi(1), q(-1, 2)));
}
