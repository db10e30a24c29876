//! Extended-precision evaluation (128-bit significand).

use astro_float::{BigFloat, Consts, Radix, RoundingMode};

use super::{ExpPoly, Q};
use crate::error::Error;

/// Denominators with magnitude below this are treated as poles.
pub const DEFAULT_POLE_THRESHOLD: f64 = 1e-30;

const PREC: usize = 128;
const RM: RoundingMode = RoundingMode::ToEven;

#[derive(Clone, Debug)]
pub struct EvalConfig {
    pub pole_threshold: f64,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            pole_threshold: DEFAULT_POLE_THRESHOLD,
        }
    }
}

fn to_big(r: &Q, cc: &mut Consts) -> BigFloat {
    let n = BigFloat::parse(&r.numer().to_string(), Radix::Dec, PREC, RM, cc);
    let d = BigFloat::parse(&r.denom().to_string(), Radix::Dec, PREC, RM, cc);
    n.div(&d, PREC, RM)
}

fn to_f64(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    x.to_string().parse::<f64>().unwrap_or(f64::NAN)
}

fn sum(p: &ExpPoly, t: &Q, x: &Q, cc: &mut Consts) -> BigFloat {
    let mut s = BigFloat::from_i64(0, PREC);
    for (e, c) in p.terms() {
        let arg = &e.a * t + &e.b * x;
        let term = to_big(c, cc).mul(&to_big(&arg, cc).exp(PREC, RM, cc), PREC, RM);
        s = s.add(&term, PREC, RM);
    }
    s
}

pub(crate) fn eval_poly(p: &ExpPoly, t: &Q, x: &Q) -> f64 {
    let mut cc = Consts::new().expect("float constants");
    to_f64(&sum(p, t, x, &mut cc))
}

pub(crate) fn eval_ratio(num: &ExpPoly, den: &ExpPoly, t: &Q, x: &Q, cfg: &EvalConfig) -> Result<f64, Error> {
    let mut cc = Consts::new().expect("float constants");
    let d = sum(den, t, x, &mut cc);
    let dm = to_f64(&d.abs());
    if dm < cfg.pole_threshold {
        return Err(Error::EvalPole {
            t: t.to_string(),
            x: x.to_string(),
        });
    }
    let n = sum(num, t, x, &mut cc);
    Ok(to_f64(&n.div(&d, PREC, RM)))
}
