//! Long-running confirmations; run with `cargo test --release -- --ignored`.

use nwave::tau::solution_from_tau;
use nwave::transforms::{apply, g2_t1_derived, TransformId};
use nwave::verify::dataset;
use nwave::wavesys::failing_equations;
use nwave::{model, Algebra};

/// Pins the ½ coefficient of the G2 T1 bracket: on W(2,1) with 4+3 spikes
/// the pivot and both third-root fields are nonzero, so every term of the
/// bracket participates.
#[test]
#[ignore = "several minutes in release mode"]
fn g2_t1_bracket_coefficient_on_w21() {
    let s = dataset(0, 4, 3);
    let g2 = model(Algebra::G2);
    let w21 = solution_from_tau(&g2, &s, 2, 1).unwrap();
    assert!(failing_equations(&w21).is_empty());
    let t1 = apply(TransformId::G2T1, &w21).unwrap();
    assert_eq!(t1, g2_t1_derived(&w21).unwrap());
    assert_eq!(t1, solution_from_tau(&g2, &s, 3, 1).unwrap());
}
