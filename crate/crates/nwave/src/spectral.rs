//! Delta-spike spectral data and the initial lower-triangular solutions.

use std::collections::BTreeSet;

use crate::error::Error;
use crate::exprat::{ExpRational, WaveConstants, Q};
use crate::tau;
use crate::wavesys::{Algebra, AlgebraModel, FieldConfig, RootLabel};

/// One Dirac spike `w·δ(λ − pos)` of a spectral measure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spike {
    pub pos: Q,
    pub weight: Q,
}

impl Spike {
    pub fn new(pos: Q, weight: Q) -> Self {
        Spike { pos, weight }
    }
}

/// Wave constants plus the spike lists of the measures `P` (first simple
/// root, parameter λ) and `Q` (second simple root, parameter μ).
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralData {
    pub constants: WaveConstants,
    pub pspikes: Vec<Spike>,
    pub qspikes: Vec<Spike>,
}

impl SpectralData {
    pub fn new(constants: WaveConstants, pspikes: Vec<Spike>, qspikes: Vec<Spike>) -> Result<Self, Error> {
        let s = SpectralData { constants, pspikes, qspikes };
        validate(&s)?;
        Ok(s)
    }

    /// Every spike weight multiplied by `k`.
    pub fn rescaled(&self, k: &Q) -> SpectralData {
        let sc = |v: &[Spike]| v.iter().map(|s| Spike::new(s.pos.clone(), &s.weight * k)).collect();
        SpectralData {
            constants: self.constants.clone(),
            pspikes: sc(&self.pspikes),
            qspikes: sc(&self.qspikes),
        }
    }
}

/// Enforces distinct positions within and across the two measures,
/// nonzero weights, and `δ ≠ 0`.
pub fn validate(s: &SpectralData) -> Result<(), Error> {
    let w = &s.constants;
    if (&w.c1 * &w.d2 - &w.c2 * &w.d1) != w.delta || num_traits::Zero::is_zero(&w.delta) {
        return Err(Error::InvalidSpectralData("wave constants have delta = 0".into()));
    }
    for (name, list) in [("P", &s.pspikes), ("Q", &s.qspikes)] {
        let mut seen = BTreeSet::new();
        for sp in list.iter() {
            if num_traits::Zero::is_zero(&sp.weight) {
                return Err(Error::InvalidSpectralData(format!("{name}-spike at {} has zero weight", sp.pos)));
            }
            if !seen.insert(sp.pos.clone()) {
                return Err(Error::InvalidSpectralData(format!("duplicate {name}-spike position {}", sp.pos)));
            }
        }
    }
    for p in &s.pspikes {
        if s.qspikes.iter().any(|q| q.pos == p.pos) {
            return Err(Error::InvalidSpectralData(format!(
                "P-spike and Q-spike share position {} (pole of 1/(λ−μ))",
                p.pos
            )));
        }
    }
    Ok(())
}

/// Sign of G2 `f^-_{1.2} = s·V(1;1,1,0)`. The printed integral carries a
/// leading minus; the exact residual of the G2 system requires `+1` in the
/// `d·t − c·x` exponent orientation used throughout.
pub const G2_F12_SIGN: i64 = 1;
/// Sign of G2 `f^-_{1.3} = s·V(1;1,1,1)`, pinned by the residual check.
pub const G2_F13_SIGN: i64 = 1;
/// Sign of G2 `f^-_{2.3} = s·V(2;1,1,1)` (the `½(λ1−λ2)²` integral is the
/// subset sum over unordered λ-pairs), pinned by the residual check.
pub const G2_F23_SIGN: i64 = -1;

/// All `f^+ = 0`; `f^-` from the single- and multi-spike integrals.
pub fn initial_config(m: &AlgebraModel, s: &SpectralData) -> Result<FieldConfig, Error> {
    validate(s)?;
    let mut cfg = FieldConfig::zero(m.name, s.constants.clone());
    let put = |cfg: &mut FieldConfig, p, q, v: crate::exprat::ExpPoly| cfg.set(RootLabel::minus(p, q), ExpRational::from(v));
    put(&mut cfg, 1, 0, tau::tau_u(s, 1, 0))?;
    put(&mut cfg, 0, 1, tau::tau_u(s, 0, 1))?;
    put(&mut cfg, 1, 1, tau::tau_u(s, 1, 1))?;
    match m.name {
        Algebra::A2 => {}
        Algebra::B2 => put(&mut cfg, 1, 2, tau::tau_v_b2(s, 1, 1, 1))?,
        Algebra::G2 => {
            let k = |c: i64| crate::exprat::qi(c);
            put(&mut cfg, 1, 2, tau::tau_v_g2(s, 1, 1, 1, 0).scale(&k(G2_F12_SIGN)))?;
            put(&mut cfg, 1, 3, tau::tau_v_g2(s, 1, 1, 1, 1).scale(&k(G2_F13_SIGN)))?;
            put(&mut cfg, 2, 3, tau::tau_v_g2(s, 2, 1, 1, 1).scale(&k(G2_F23_SIGN)))?;
        }
    }
    Ok(cfg)
}
