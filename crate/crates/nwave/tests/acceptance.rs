//! Acceptance gate: runs every criterion and prints one PASS/FAIL line each.
//! Exits nonzero if any criterion fails.

use std::time::Instant;

use nwave::exprat::{q, qi};
use nwave::spectral::initial_config;
use nwave::verify::{self, dataset, Mode, Report, Status};
use nwave::{model, Algebra, ExpPoly, ExpRational, LinForm, WaveConstants};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn gated_summary(r: &Report) -> String {
    let failing: Vec<&str> = r.checks.iter().filter(|c| c.gated && !c.pass()).map(|c| c.name.as_str()).collect();
    if failing.is_empty() {
        format!("{} gated checks pass", r.passed)
    } else {
        format!("failing: {}", failing.join("; "))
    }
}

fn checks_pass(r: &Report, names: &[String]) -> (bool, Vec<String>) {
    let bad: Vec<String> = names.iter().filter(|n| !r.check(n).is_some_and(|c| c.pass())).cloned().collect();
    (bad.is_empty(), bad)
}

// -- 1 ----------------------------------------------------------------------

fn ratio() -> impl Strategy<Value = ExpRational> {
    let small_q = (-4i64..=4, 1i64..=3).prop_map(|(n, d)| q(n, d));
    let a = prop_oneof![Just(qi(-1)), Just(qi(0)), Just(q(1, 2)), Just(qi(1))];
    let b = prop_oneof![Just(q(-1, 3)), Just(qi(0)), Just(qi(1))];
    let term = (small_q, (a, b).prop_map(|(a, b)| LinForm::new(a, b)));
    let poly = |n: usize| prop::collection::vec(term.clone(), 0..=n).prop_map(ExpPoly::from_terms);
    (poly(3), poly(2).prop_filter("nonzero", |p| !p.is_zero())).prop_map(|(n, d)| ExpRational::new(n, d).unwrap())
}

#[allow(clippy::eq_op)]
fn criterion_1() -> Outcome {
    let w = WaveConstants::new(qi(1), q(1, 2), q(1, 3), qi(1)).unwrap();
    let idx = (-2i64..=3, -2i64..=3);
    let mut runner = TestRunner::new(Config {
        cases: 500,
        failure_persistence: None,
        ..Config::default()
    });
    let ring = runner.run(&(ratio(), ratio(), ratio()), |(f, g, h)| {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
        Ok(())
    });
    let mut runner = TestRunner::new(Config {
        cases: 500,
        failure_persistence: None,
        ..Config::default()
    });
    let leibniz = runner.run(&(ratio(), ratio(), idx.clone()), |(f, g, (i, j))| {
        prop_assert_eq!((&f * &g).deriv(i, j, &w), &(&f.deriv(i, j, &w) * &g) + &(&f * &g.deriv(i, j, &w)));
        Ok(())
    });
    let mut runner = TestRunner::new(Config {
        cases: 500,
        failure_persistence: None,
        ..Config::default()
    });
    let linear = runner.run(&(ratio(), idx.clone(), idx), |(f, (i, j), (k, l))| {
        prop_assert_eq!(f.deriv(i + k, j + l, &w), &f.deriv(i, j, &w) + &f.deriv(k, l, &w));
        Ok(())
    });
    let errs: Vec<String> = [
        ring.err().map(|e| format!("ring: {e}")),
        leibniz.err().map(|e| format!("Leibniz: {e}")),
        linear.err().map(|e| format!("D-linearity: {e}")),
    ]
    .into_iter()
    .flatten()
    .collect();
    outcome(
        errs.is_empty(),
        if errs.is_empty() {
            "3 x 500 exact cases".to_string()
        } else {
            errs.join("; ")
        },
    )
}

// -- 2 ----------------------------------------------------------------------

fn criterion_2() -> Outcome {
    let s = dataset(0, 2, 3);
    let mut bad = vec![];
    for a in [Algebra::A2, Algebra::B2, Algebra::G2] {
        match initial_config(&model(a), &s) {
            Ok(c) => {
                let r = verify::verify_config(&c, Mode::Exact);
                if !r.pass() {
                    bad.push(format!("{a}: {}", gated_summary(&r)));
                }
            }
            Err(e) => bad.push(format!("{a}: {e}")),
        }
    }
    outcome(bad.is_empty(), if bad.is_empty() { "A2, B2, G2 on 2P+3Q".to_string() } else { bad.join("; ") })
}

// -- 3, 4 -------------------------------------------------------------------

fn criterion_3(a2: &Report) -> Outcome {
    let mut names: Vec<String> = (0..=2).flat_map(|n1| (0..=2).map(move |n2| format!("tau ({n1},{n2}) residuals"))).collect();
    names.push("chain interruption at (2,2): every f- vanishes".into());
    names.extend(
        [(3, 0), (0, 3), (3, 2), (2, 3)]
            .iter()
            .map(|(a, b)| format!("TauZero beyond the spike count at ({a},{b})")),
    );
    let (ok, bad) = checks_pass(a2, &names);
    outcome(
        ok,
        if ok {
            format!("{} checks on 2+2 spikes", names.len())
        } else {
            format!("failing: {}", bad.join("; "))
        },
    )
}

fn criterion_4(ta: &Report) -> Outcome {
    let names: Vec<String> = ta.checks.iter().filter(|c| c.name.starts_with("A2 ")).map(|c| c.name.clone()).collect();
    let (ok, bad) = checks_pass(ta, &names);
    let ok = ok && names.len() == 15;
    outcome(
        ok,
        if bad.is_empty() {
            format!("{} checks (3 datasets, chains n1+n2<=3)", names.len())
        } else {
            format!("failing: {}", bad.join("; "))
        },
    )
}

// -- 5, 8 -------------------------------------------------------------------

fn criterion_5(b2: &Report) -> Outcome {
    let names: Vec<String> = b2
        .checks
        .iter()
        .filter(|c| c.gated && (c.name.starts_with("B2_") || c.name.contains("initial_config residuals")))
        .map(|c| c.name.clone())
        .collect();
    let (ok, bad) = checks_pass(b2, &names);
    outcome(
        ok && names.len() >= 12,
        if bad.is_empty() {
            format!("{} gated B2 transformation checks", names.len())
        } else {
            format!("failing: {}", bad.join("; "))
        },
    )
}

fn criterion_8(b2: &Report) -> Outcome {
    let names: Vec<String> = [(0, 0), (1, 0), (0, 1), (1, 1)]
        .iter()
        .map(|(a, b)| format!("V solution ({a},{b}) residuals"))
        .collect();
    let (ok, bad) = checks_pass(b2, &names);
    outcome(
        ok,
        if ok {
            "B2 residuals exact at {0,1}^2 on 2+4 spikes".to_string()
        } else {
            format!("failing: {}", bad.join("; "))
        },
    )
}

// -- 6, 7 -------------------------------------------------------------------

fn criterion_6(toda: &Report) -> Outcome {
    outcome(toda.pass() && toda.passed >= 9, gated_summary(toda))
}

fn criterion_7(app: &Report, gra: &Report) -> Outcome {
    let names: Vec<String> = vec!["ab_step to level 1 = closed forms".into(), "ab_step to level 2 = closed forms".into()];
    let (ok_ab, bad) = checks_pass(app, &names);
    let gra_names: Vec<String> = (0..=1).map(|n| format!("GRA identity at n={n}")).collect();
    let (ok_gra, bad_gra) = checks_pass(gra, &gra_names);
    let ok = ok_ab && ok_gra && gra.pass();
    outcome(
        ok,
        if ok {
            "ab_step = closed forms at n=1,2; GRA at n=0,1".to_string()
        } else {
            format!("failing: {}", [bad, bad_gra].concat().join("; "))
        },
    )
}

// -- 9 ----------------------------------------------------------------------

fn criterion_9(g2: &Report) -> Outcome {
    let mut recorded = vec![];
    let mut all_present = true;
    for (n1, n2) in verify::G2_HYPOTHESIS_ORDERS {
        match g2.check(&format!("W solution ({n1},{n2}) residuals")) {
            Some(c) => recorded.push(format!("({n1},{n2}) {:?}", c.status)),
            None => all_present = false,
        }
    }
    let base = g2.check("W solution (0,0) residuals").is_some_and(|c| c.pass() && c.gated);
    outcome(base && all_present, format!("recorded: {}", recorded.join(", ")))
}

// -- 10 ---------------------------------------------------------------------

fn criterion_10() -> Outcome {
    let mut total = 0;
    let mut bad = vec![];
    for suite in verify::SUITES {
        match verify::coherence(suite) {
            Ok(rows) => {
                for (name, exact, numeric) in rows {
                    if exact == Status::Pass {
                        total += 1;
                        if numeric != Status::Pass {
                            bad.push(format!("{suite}/{name}"));
                        }
                    }
                }
            }
            Err(e) => bad.push(format!("{suite}: {e}")),
        }
    }
    outcome(
        bad.is_empty() && total > 0,
        if bad.is_empty() {
            format!("{total} exact-PASS checks agree numerically")
        } else {
            format!("incoherent: {}", bad.join("; "))
        },
    )
}

fn main() {
    let suite = |n: &str| verify::verify_suite(n, Mode::Exact).expect("known suite");
    let t = Instant::now();
    let mut results: Vec<(usize, &str, Outcome)> = vec![];
    results.push((1, "exprat laws", criterion_1()));
    results.push((2, "initial solutions", criterion_2()));
    let a2 = suite("a2-full");
    results.push((3, "A2 end-to-end", criterion_3(&a2)));
    let ta = suite("transforms-algebra");
    results.push((4, "A2 transformation algebra", criterion_4(&ta)));
    let b2 = suite("b2-full");
    results.push((5, "B2 transformations", criterion_5(&b2)));
    results.push((6, "Toda suite", criterion_6(&suite("toda"))));
    results.push((7, "appendix oracle", criterion_7(&suite("appendix"), &suite("gra"))));
    results.push((8, "B2 end-to-end", criterion_8(&b2)));
    results.push((9, "G2 hypothesis suite", criterion_9(&suite("g2-hypothesis"))));
    results.push((10, "exact/numeric coherence", criterion_10()));

    let mut failed = 0;
    for (n, name, o) in &results {
        if !o.pass {
            failed += 1;
        }
        println!("{} criterion {n:2} ({name}): {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    println!(
        "acceptance: {}/{} criteria pass in {:.1}s",
        results.len() - failed,
        results.len(),
        t.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
