//! Hankel minors of successive derivatives, the Toda relation they satisfy,
//! the A/B chain of the second-root map in the Toda background, and the
//! bordered-determinant form of the B2 first-root chain.

use crate::error::Error;
use crate::exprat::{q, ExpPoly, ExpRational, WaveConstants};
use crate::spectral::SpectralData;
use crate::tau;
use crate::wavesys::{Algebra, FieldConfig, RootLabel};

/// Exact quotient of two exponential polynomials known to divide.
fn exact_div(a: &ExpPoly, b: &ExpPoly) -> ExpPoly {
    let r = ExpRational::new(a.clone(), b.clone()).expect("nonzero divisor");
    r.as_poly().cloned().expect("fraction-free step divides exactly")
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
pub fn det_bareiss(m: &[Vec<ExpPoly>]) -> ExpPoly {
    let n = m.len();
    if n == 0 {
        return ExpPoly::one();
    }
    let mut a: Vec<Vec<ExpPoly>> = m.to_vec();
    let mut prev = ExpPoly::one();
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return ExpPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = exact_div(&v, &prev);
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Determinant by first-row cofactor expansion (reference implementation).
pub fn det_cofactor(m: &[Vec<ExpPoly>]) -> ExpPoly {
    match m.len() {
        0 => ExpPoly::one(),
        1 => m[0][0].clone(),
        n => {
            let mut s = ExpPoly::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<ExpPoly>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| v.clone()).collect())
                    .collect();
                let t = &m[0][j] * &det_cofactor(&minor);
                s = if j % 2 == 0 { &s + &t } else { &s - &t };
            }
            s
        }
    }
}

/// Main minors `Det_n = det[D^{i+j} r]_{0≤i,j<n}` of the Hankel matrix of a
/// seed `r`, extended lazily.
#[derive(Clone, Debug)]
pub struct HankelChain {
    pub seed: ExpPoly,
    pub direction: (i64, i64),
    pub constants: WaveConstants,
    derivs: Vec<ExpPoly>,
    dets: Vec<ExpPoly>,
}

impl HankelChain {
    pub fn new(seed: ExpPoly, constants: WaveConstants) -> Self {
        Self::with_direction(seed, (1, 0), constants)
    }

    pub fn with_direction(seed: ExpPoly, direction: (i64, i64), constants: WaveConstants) -> Self {
        HankelChain {
            derivs: vec![seed.clone()],
            seed,
            direction,
            constants,
            dets: vec![ExpPoly::one()],
        }
    }

    /// `D^k r`.
    pub fn deriv(&mut self, k: usize) -> &ExpPoly {
        while self.derivs.len() <= k {
            let last = self.derivs.last().expect("seed present");
            let next = last.deriv(self.direction.0, self.direction.1, &self.constants);
            self.derivs.push(next);
        }
        &self.derivs[k]
    }

    /// The `n×n` Hankel matrix.
    pub fn matrix(&mut self, n: usize) -> Vec<Vec<ExpPoly>> {
        if n > 0 {
            self.deriv(2 * n - 2);
        }
        (0..n).map(|i| (0..n).map(|j| self.derivs[i + j].clone()).collect()).collect()
    }

    /// `Det_n`; `Det_{-1}` is taken as 0.
    pub fn det_n(&mut self, n: i64) -> ExpPoly {
        if n < 0 {
            return ExpPoly::zero();
        }
        let n = n as usize;
        while self.dets.len() <= n {
            let m = self.matrix(self.dets.len());
            self.dets.push(det_bareiss(&m));
        }
        self.dets[n].clone()
    }

    fn d(&self, p: &ExpRational) -> ExpRational {
        p.deriv(self.direction.0, self.direction.1, &self.constants)
    }
}

/// `D²(ln Det_n) − Det_{n−1}Det_{n+1}/Det_n²`, with the logarithmic
/// derivative expanded as `(Det·D²Det − (D Det)²)/Det²`.
pub fn toda_residual(chain: &mut HankelChain, n: i64) -> Result<ExpRational, Error> {
    let dn = ExpRational::from(chain.det_n(n));
    if dn.is_zero() {
        return Err(Error::PivotZero(format!("Det_{n}")));
    }
    let d1 = chain.d(&dn);
    let d2 = chain.d(&d1);
    let lhs = &(&dn * &d2) - &(&d1 * &d1);
    let rhs = ExpRational::from(&chain.det_n(n - 1) * &chain.det_n(n + 1));
    (&lhs - &rhs).checked_div(&dn.pow(2))
}

/// The subset-sum form of `(1/n!)∫ΠQ W²_n e^{…}`: `U(0,n)`.
pub fn det_integral_form(s: &SpectralData, n: i64) -> ExpPoly {
    tau::tau_u(s, 0, n)
}

/// One level of the A/B chain.
#[derive(Clone, Debug, PartialEq)]
pub struct ABChain {
    pub level: i64,
    pub a: ExpRational,
    pub b: ExpRational,
}

/// Closed forms `A^n = V(1;n,n+1)`, `B^n = V(1;n+1,n+1)`.
pub fn ab_closed(s: &SpectralData, n: i64) -> (ExpPoly, ExpPoly) {
    (tau::tau_v_b2(s, 1, n, n + 1), tau::tau_v_b2(s, 1, n + 1, n + 1))
}

/// Level-0 values: the single-λ, one- and two-μ sums.
pub fn ab_zero(s: &SpectralData) -> ABChain {
    let (a, b) = ab_closed(s, 0);
    ABChain {
        level: 0,
        a: a.into(),
        b: b.into(),
    }
}

/// The Toda background `r = f^-_{0.1} = ∫Q` for a spectral data set.
pub fn background_chain(s: &SpectralData) -> HankelChain {
    HankelChain::new(tau::tau_u(s, 0, 1), s.constants.clone())
}

/// One step of the chain in the Toda background, with `Det_{−1} = 0`:
///
/// `A' = (½ Det_{n+1} D B − B D Det_{n+1}) / Det_n`,
/// `B' = Det_{n+1}² [ (¼D²B − (D Det_{n+1}/Det_{n+1}) D B + (D Det_{n+1}/Det_{n+1})² B)/Det_n²
///        + (A D Det_{n+1} − Det_{n+1} D A)/(2 Det_n³)
///        + Det_{n+1}(A D Det_n + B Det_{n−1})/(2 Det_n⁴) ]`.
pub fn ab_step(prev: &ABChain, chain: &mut HankelChain) -> Result<ABChain, Error> {
    let n = prev.level;
    let dn = ExpRational::from(chain.det_n(n));
    let dn1 = ExpRational::from(chain.det_n(n + 1));
    let dm = ExpRational::from(chain.det_n(n - 1));
    if dn.is_zero() {
        return Err(Error::PivotZero(format!("Det_{n}")));
    }
    if dn1.is_zero() {
        return Err(Error::PivotZero(format!("Det_{}", n + 1)));
    }
    let (a, b) = (&prev.a, &prev.b);
    let (da, db) = (chain.d(a), chain.d(b));
    let ddb = chain.d(&db);
    let ddn = chain.d(&dn);
    let ddn1 = chain.d(&dn1);
    let h = q(1, 2);
    let div = |x: &ExpRational, y: &ExpRational| x.checked_div(y).expect("pivot checked");

    let a_next = div(&(&(&dn1 * &db).scale(&h) - &(b * &ddn1)), &dn);

    let g = div(&ddn1, &dn1);
    let t1 = div(&(&(&ddb.scale(&q(1, 4)) - &(&g * &db)) + &(&g.pow(2) * b)), &dn.pow(2));
    let t2 = div(&(&(a * &ddn1) - &(&dn1 * &da)), &dn.pow(3).scale(&q(2, 1)));
    let t3 = div(&(&dn1 * &(&(a * &ddn) + &(b * &dm))), &dn.pow(4).scale(&q(2, 1)));
    let b_next = &dn1.pow(2) * &(&(&t1 + &t2) + &t3);
    Ok(ABChain {
        level: n + 1,
        a: a_next,
        b: b_next,
    })
}

fn minus(p: u8, qq: u8) -> RootLabel {
    RootLabel::minus(p, qq)
}

/// B2 fields after `n` first-root steps from a configuration with every
/// `f^+ = 0`, via bordered Hankel determinants in `a_k = D_{0,1}^k f^-_{1.0}`,
/// `b_k = D_{0,1}^k f^-_{1.1}`:
///
/// `f^+_{1.0} = Det_{n−1}/Det_n`, `f^-_{1.0} = Det_{n+1}/Det_n`,
/// `f^-_{0.1} = D̃et_n/Det_n`, `f^-_{1.1} = D̃et_{n+1}/Det_n`,
/// `f^-_{1.2} = D̃̃et_{n+1}/Det_n`, where `D̃et` has its last column replaced
/// by `b`, and `D̃̃et` additionally its last row, with corner `f^-_{1.2}`.
pub fn first_root_chain(cfg: &FieldConfig, steps: usize) -> Result<FieldConfig, Error> {
    if cfg.algebra != Algebra::B2 {
        return Err(Error::WrongAlgebra {
            transform: "first_root_chain".into(),
            algebra: cfg.algebra.to_string(),
        });
    }
    if let Some((r, _)) = cfg.fields().find(|(r, v)| r.sign == crate::wavesys::Sign::Plus && !v.is_zero()) {
        return Err(Error::Input(format!("first_root_chain needs every f+ = 0; {r} is not")));
    }
    if steps == 0 {
        return Ok(cfg.clone());
    }
    let w = &cfg.constants;
    let n = steps;
    let mut a = vec![cfg.get(minus(1, 0)).clone()];
    let mut b = vec![cfg.get(minus(1, 1)).clone()];
    for _ in 0..2 * n + 1 {
        let na = a.last().unwrap().deriv(0, 1, w);
        let nb = b.last().unwrap().deriv(0, 1, w);
        a.push(na);
        b.push(nb);
    }
    let corner = cfg.get(minus(1, 2)).clone();
    let det = |k: usize, col: bool, row: bool| -> ExpRational {
        let m: Vec<Vec<ExpRational>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        let last_row = row && i + 1 == k;
                        let last_col = (col || row) && j + 1 == k;
                        match (last_row, last_col) {
                            (true, true) => corner.clone(),
                            (true, false) => b[j].clone(),
                            (false, true) => b[i].clone(),
                            (false, false) => a[i + j].clone(),
                        }
                    })
                    .collect()
            })
            .collect();
        rational_det(&m)
    };
    let dn = det(n, false, false);
    if dn.is_zero() {
        return Err(Error::PivotZero(format!("Det_{n}")));
    }
    let dm = if n == 0 { ExpRational::zero() } else { det(n - 1, false, false) };
    let dv = |x: ExpRational| x.checked_div(&dn).expect("pivot checked");
    let mut out = FieldConfig::zero(Algebra::B2, w.clone());
    out.set(RootLabel::plus(1, 0), dv(dm))?;
    out.set(minus(1, 0), dv(det(n + 1, false, false)))?;
    out.set(minus(0, 1), dv(det(n, true, false)))?;
    out.set(minus(1, 1), dv(det(n + 1, true, false)))?;
    out.set(minus(1, 2), dv(det(n + 1, false, true)))?;
    Ok(out)
}

/// Cofactor determinant over ratios (small bordered matrices).
fn rational_det(m: &[Vec<ExpRational>]) -> ExpRational {
    match m.len() {
        0 => ExpRational::one(),
        1 => m[0][0].clone(),
        n => {
            let mut s = ExpRational::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<ExpRational>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| v.clone()).collect())
                    .collect();
                let t = &m[0][j] * &rational_det(&minor);
                s = if j % 2 == 0 { &s + &t } else { &s - &t };
            }
            s
        }
    }
}
