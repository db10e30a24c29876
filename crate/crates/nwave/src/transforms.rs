//! Discrete transformations of the A2, B2, G2 systems acting on field
//! configurations. Each map is written out field by field; denominators are
//! checked up front and reported as `PivotZero`.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::exprat::{q, qi, ExpRational, Q};
use crate::wavesys::{failing_equations, g2_symmetry, Algebra, FieldConfig, RootLabel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TransformId {
    A2T1,
    A2T2,
    A2T3,
    B2TM,
    B2T10,
    B2T10Inv,
    B2T2A2,
    G2T1,
    G2TA13A2,
}

impl TransformId {
    pub const ALL: [TransformId; 9] = [
        TransformId::A2T1,
        TransformId::A2T2,
        TransformId::A2T3,
        TransformId::B2TM,
        TransformId::B2T10,
        TransformId::B2T10Inv,
        TransformId::B2T2A2,
        TransformId::G2T1,
        TransformId::G2TA13A2,
    ];

    pub fn algebra(self) -> Algebra {
        use TransformId::*;
        match self {
            A2T1 | A2T2 | A2T3 => Algebra::A2,
            B2TM | B2T10 | B2T10Inv | B2T2A2 => Algebra::B2,
            G2T1 | G2TA13A2 => Algebra::G2,
        }
    }

    pub fn name(self) -> &'static str {
        use TransformId::*;
        match self {
            A2T1 => "A2_T1",
            A2T2 => "A2_T2",
            A2T3 => "A2_T3",
            B2TM => "B2_TM",
            B2T10 => "B2_T10",
            B2T10Inv => "B2_T10_INV",
            B2T2A2 => "B2_T2A2",
            G2T1 => "G2_T1",
            G2TA13A2 => "G2_TA1_3A2",
        }
    }

    /// Name without the algebra prefix, as used in CLI chains.
    pub fn short_name(self) -> &'static str {
        &self.name()[3..]
    }

    /// Resolves a full (`B2_T10`) or short (`T10`) name for an algebra.
    pub fn parse_for(algebra: Algebra, s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if let Ok(id) = s.parse::<TransformId>() {
            return Ok(id);
        }
        TransformId::ALL
            .into_iter()
            .find(|id| id.algebra() == algebra && id.short_name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Input(format!("unknown transformation '{s}' for {algebra}")))
    }
}

impl fmt::Display for TransformId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TransformId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        TransformId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Input(format!("unknown transformation '{s}'")))
    }
}

/// Formula helper bound to one input configuration.
struct Ctx<'a> {
    f: &'a FieldConfig,
}

impl<'a> Ctx<'a> {
    fn v(&self, s: &str) -> ExpRational {
        self.f.g(s).clone()
    }

    /// Nonzero pivot or `PivotZero` naming the field.
    fn piv(&self, s: &str) -> Result<ExpRational, Error> {
        let v = self.f.g(s);
        if v.is_zero() {
            return Err(Error::PivotZero(crate::wavesys::l(s).to_string()));
        }
        Ok(v.clone())
    }

    fn d(&self, x: &ExpRational, i: i64, j: i64) -> ExpRational {
        x.deriv(i, j, &self.f.constants)
    }

    fn dln(&self, x: &ExpRational, i: i64, j: i64) -> ExpRational {
        x.log_deriv(i, j, &self.f.constants).expect("pivot checked")
    }
}

fn div(a: &ExpRational, b: &ExpRational) -> ExpRational {
    a.checked_div(b).expect("pivot checked")
}

fn k(n: i64, d: i64) -> Q {
    q(n, d)
}

/// Applies one transformation.
pub fn apply(id: TransformId, cfg: &FieldConfig) -> Result<FieldConfig, Error> {
    if cfg.algebra != id.algebra() {
        return Err(Error::WrongAlgebra {
            transform: id.name().into(),
            algebra: cfg.algebra.to_string(),
        });
    }
    match id {
        TransformId::A2T1 => a2_t1(cfg),
        TransformId::A2T2 => a2_t2(cfg),
        TransformId::A2T3 => a2_t3(cfg),
        TransformId::B2TM => b2_tm(cfg),
        TransformId::B2T10 => b2_t10(cfg),
        TransformId::B2T10Inv => b2_t10_inv(cfg),
        TransformId::B2T2A2 => b2_t10_inv(&b2_tm(cfg)?),
        TransformId::G2T1 => g2_t1(cfg),
        TransformId::G2TA13A2 => g2_ta13(cfg),
    }
}

/// Left-to-right composition; errors carry the failing step index.
pub fn apply_chain(ids: &[TransformId], cfg: &FieldConfig) -> Result<FieldConfig, Error> {
    let mut cur = cfg.clone();
    for (step, id) in ids.iter().enumerate() {
        cur = apply(*id, &cur).map_err(|e| Error::ChainStep { step, source: Box::new(e) })?;
    }
    Ok(cur)
}

#[derive(Clone, Debug)]
pub struct InvarianceReport {
    pub transform: TransformId,
    pub failing: Vec<RootLabel>,
}

impl InvarianceReport {
    pub fn pass(&self) -> bool {
        self.failing.is_empty()
    }
}

/// Applies the map and checks every equation of the output exactly.
pub fn verify_invariance(id: TransformId, cfg: &FieldConfig) -> Result<InvarianceReport, Error> {
    let out = apply(id, cfg)?;
    Ok(InvarianceReport {
        transform: id,
        failing: failing_equations(&out),
    })
}

/// `D_a D_b ln f = D_a (D_b f / f)`.
fn lndd(c: &Ctx, f: &ExpRational, a: (i64, i64), b: (i64, i64)) -> ExpRational {
    let inner = c.dln(f, b.0, b.1);
    c.d(&inner, a.0, a.1)
}

fn a2_t1(f: &FieldConfig) -> Result<FieldConfig, Error> {
    let c = Ctx { f };
    let a = c.piv("-10")?;
    let mut n = f.clone();
    n.put("+10", a.recip()?);
    n.put("-01", div(&c.v("-11"), &a));
    n.put("+11", -div(&c.v("+01"), &a));
    // prefactor is f^-_{1.0}; see the typo ledger
    n.put("+01", &a * &c.d(&div(&c.v("+01"), &a), 1, 1));
    n.put("-11", &a * &c.d(&div(&c.v("-11"), &a), 0, 1));
    n.put("-10", &a * &(&(&c.v("+10") * &a) + &lndd(&c, &a, (0, 1), (1, 1))));
    Ok(n)
}

fn a2_t2(f: &FieldConfig) -> Result<FieldConfig, Error> {
    let c = Ctx { f };
    let a = c.piv("-01")?;
    let mut n = f.clone();
    n.put("+01", a.recip()?);
    n.put("-10", -div(&c.v("-11"), &a));
    n.put("+11", div(&c.v("+10"), &a));
    n.put("+10", -(&a * &c.d(&div(&c.v("+10"), &a), 1, 1)));
    n.put("-11", -(&a * &c.d(&div(&c.v("-11"), &a), 1, 0)));
    n.put("-01", &a * &(&(&c.v("+01") * &a) + &lndd(&c, &a, (1, 0), (1, 1))));
    Ok(n)
}

fn a2_t3(f: &FieldConfig) -> Result<FieldConfig, Error> {
    let c = Ctx { f };
    let a = c.piv("-11")?;
    let mut n = f.clone();
    n.put("+11", a.recip()?);
    n.put("+10", -div(&c.v("-01"), &a));
    n.put("+01", div(&c.v("-10"), &a));
    n.put("-01", -(&a * &c.d(&div(&c.v("-01"), &a), 1, 0)));
    n.put("-10", &a * &c.d(&div(&c.v("-10"), &a), 0, 1));
    n.put("-11", &a * &(&(&c.v("+11") * &a) - &lndd(&c, &a, (1, 0), (0, 1))));
    Ok(n)
}

fn b2_tm(f: &FieldConfig) -> Result<FieldConfig, Error> {
    let c = Ctx { f };
    let a = c.piv("-12")?;
    let (m01, m11) = (c.v("-01"), c.v("-11"));
    let (p01, p11, p12) = (c.v("+01"), c.v("+11"), c.v("+12"));
    let l = c.dln(&a, 1, 0);
    let h = k(1, 2);
    let mut n = f.clone();
    n.put("+12", a.recip()?);
    n.put("+01", div(&m11, &a));
    n.put("+11", -div(&m01, &a));
    n.put("+10", &c.v("+10") + &div(&m01.pow(2), &a));
    n.put("-10", &c.v("-10") - &div(&m11.pow(2), &a));
    n.put("-01", &(&-c.d(&m01, 1, 0) - &(&p11 * &a)) + &(&m01 * &l).scale(&h));
    n.put("-11", &(&-c.d(&m11, 1, 0) + &(&p01 * &a)) + &(&m11 * &l).scale(&h));
    let cross = div(&(&(&m11 * &c.d(&m01, 1, 0)) - &(&m01 * &c.d(&m11, 1, 0))), &a.scale(&qi(2)));
    let br = &(&(&c.d(&l, 1, 0).scale(&k(1, 4)) + &cross) + &(&(&p12 * &a) + &(&p11 * &m11))) + &(&p01 * &m01);
    n.put("-12", &a * &br);
    Ok(n)
}

fn b2_t10(f: &FieldConfig) -> Result<FieldConfig, Error> {
    let c = Ctx { f };
    let a = c.piv("-10")?;
    let (m01, m11) = (c.v("-01"), c.v("-11"));
    let (p01, p10, p11) = (c.v("+01"), c.v("+10"), c.v("+11"));
    let l = c.dln(&a, 1, 2);
    let h = k(1, 2);
    let mut n = f.clone();
    n.put("+10", a.recip()?);
    n.put("-01", div(&m11, &a));
    n.put("+11", -div(&p01, &a));
    n.put("+12", &c.v("+12") + &div(&p01.pow(2), &a));
    n.put("-12", &c.v("-12") - &div(&m11.pow(2), &a));
    n.put("+01", &(&c.d(&p01, 1, 2) - &(&p11 * &a)) - &(&p01 * &l).scale(&h));
    n.put("-11", &(&c.d(&m11, 1, 2) + &(&m01 * &a)) - &(&m11 * &l).scale(&h));
    // cross-term and f^+_{1.1}f^-_{1.1} signs corrected; see the typo ledger
    let cross = div(&(&(&m11 * &c.d(&p01, 1, 2)) - &(&p01 * &c.d(&m11, 1, 2))), &a.scale(&qi(2)));
    let br = &(&(&c.d(&l, 1, 2).scale(&k(1, 4)) - &cross) + &(&(&p10 * &a) + &(&p11 * &m11))) + &(&p01 * &m01);
    n.put("-10", &a * &br);
    Ok(n)
}

fn b2_t10_inv(g: &FieldConfig) -> Result<FieldConfig, Error> {
    let c = Ctx { f: g };
    let a = c.piv("+10")?;
    let (m01, m10, m11) = (c.v("-01"), c.v("-10"), c.v("-11"));
    let (p01, p11) = (c.v("+01"), c.v("+11"));
    let l = c.dln(&a, 1, 2);
    let h = k(1, 2);
    let mut n = g.clone();
    n.put("-10", a.recip()?);
    n.put("+01", -div(&p11, &a));
    n.put("-11", div(&m01, &a));
    n.put("+12", &c.v("+12") - &div(&p11.pow(2), &a));
    n.put("-12", &c.v("-12") + &div(&m01.pow(2), &a));
    // signs of the product and log-derivative terms corrected; see the typo ledger
    n.put("-01", &(&-c.d(&m01, 1, 2) + &(&m11 * &a)) + &(&m01 * &l).scale(&h));
    n.put("+11", &(&-c.d(&p11, 1, 2) - &(&p01 * &a)) + &(&p11 * &l).scale(&h));
    let cross = div(&(&(&p11 * &c.d(&m01, 1, 2)) - &(&m01 * &c.d(&p11, 1, 2))), &a.scale(&qi(2)));
    let br = &(&(&c.d(&l, 1, 2).scale(&k(1, 4)) - &cross) + &(&(&a * &m10) + &(&p11 * &m11))) + &(&p01 * &m01);
    n.put("+10", &a * &br);
    Ok(n)
}

/// The seven algebraic relations of the G2 first-root map.
fn g2_t1_algebraic(c: &Ctx, n: &mut FieldConfig) -> Result<ExpRational, Error> {
    let a = c.piv("-10")?;
    n.put("+10", a.recip()?);
    n.put("-13", -div(&c.v("-23"), &a));
    n.put("+11", -div(&c.v("+01"), &a));
    n.put("-01", div(&c.v("-11"), &a));
    n.put("+23", div(&c.v("+13"), &a));
    n.put("+12", &c.v("+12") + &div(&(&(&c.v("-11") * &c.v("+13")) + &c.v("+01").pow(2)), &a));
    n.put("-12", &c.v("-12") - &div(&(&(&c.v("-23") * &c.v("+01")) + &c.v("-11").pow(2)), &a));
    Ok(a)
}

fn g2_t1(f: &FieldConfig) -> Result<FieldConfig, Error> {
    let c = Ctx { f };
    let mut n = f.clone();
    let a = g2_t1_algebraic(&c, &mut n)?;
    let (m01, m11, m13, m23) = (c.v("-01"), c.v("-11"), c.v("-13"), c.v("-23"));
    let (p01, p10, p11, p13, p23) = (c.v("+01"), c.v("+10"), c.v("+11"), c.v("+13"), c.v("+23"));
    let h = k(1, 2);
    let a2 = a.scale(&qi(2));
    let da = c.d(&a, 1, 2);
    // (a·D g − ½ g·D a)/a
    let lead = |g: &ExpRational| div(&(&(&a * &c.d(g, 1, 2)) - &(g * &da).scale(&h)), &a);
    let c3 = |x: i64, g: ExpRational| g.scale(&qi(x));

    let t = &(&(&-(&m23.pow(2) * &p13) + &c3(2, m11.pow(3))) + &c3(3, &(&m23 * &m11) * &p01));
    n.put("-23", &(&lead(&m23) - &(&a * &m13)) + &div(t, &a2));

    let t = &(&(&c3(2, &m11.pow(2) * &p13) + &(&p01.pow(2) * &m11)) + &(&(&m23 * &p01) * &p13));
    n.put("+01", &(&lead(&p01) - &(&p11 * &a)) + &div(t, &a2));

    // last numerator term −2(f^+_{0.1})³; see the typo ledger
    let t = &(&(&(&p13.pow(2) * &m23) - &c3(3, &(&p13 * &m11) * &p01)) - &c3(2, p01.pow(3)));
    n.put("+13", &(&lead(&p13) + &(&p23 * &a)) + &div(t, &a2));

    let t = &(&(&c3(2, &p01.pow(2) * &m23) + &(&m11.pow(2) * &p01)) + &(&(&m23 * &m11) * &p13));
    n.put("-11", &(&lead(&m11) + &(&m01 * &a)) - &div(t, &a2));

    // bracket with the quartic terms in f^-_{1.1}, the ½/3⁄2 weights
    // exchanged, and no f^+_{0.1}(f^-_{2.3}f^+_{1.2} − f^+_{0.1}f^-_{1.2})
    // term; see the typo ledger
    let dlog = c.dln(&a, 1, 2);
    let mut br = c.d(&dlog, 1, 2).scale(&k(1, 4));
    br = &br + &(&a * &p10);
    br = &br + &(&(&m01 * &p01) + &(&m11 * &p11)).scale(&k(3, 2));
    br = &br + &(&(&m23 * &p23) + &(&m13 * &p13)).scale(&h);
    br = &br + &div(&(&(&p01 * &c.d(&m11, 1, 2)) - &(&m11 * &c.d(&p01, 1, 2))), &a).scale(&k(3, 4));
    br = &br - &div(&(&(&p13 * &c.d(&m23, 1, 2)) - &(&m23 * &c.d(&p13, 1, 2))), &a).scale(&k(1, 4));
    let x = &m11 * &p01;
    let y = &m23 * &p13;
    let quart = &(&(&(&c3(3, x.pow(2)) - &y.pow(2)) + &c3(6, &x * &y)) + &c3(4, &m11.pow(3) * &p13)) + &c3(4, &p01.pow(3) * &m23);
    br = &br - &div(&quart, &a.pow(2)).scale(&k(1, 4));
    n.put("-10", &a * &br);
    Ok(n)
}

/// G2 first-root map with the five differential fields obtained by solving
/// the transformed system for them (an independent cross-check of the
/// printed formulas).
pub fn g2_t1_derived(f: &FieldConfig) -> Result<FieldConfig, Error> {
    if f.algebra != Algebra::G2 {
        return Err(Error::WrongAlgebra {
            transform: "G2_T1".into(),
            algebra: f.algebra.to_string(),
        });
    }
    let c = Ctx { f };
    let mut n = f.clone();
    g2_t1_algebraic(&c, &mut n)?;
    let w = &f.constants;
    let nv = |n: &FieldConfig, s: &str| n.g(s).clone();
    let d = |x: &ExpRational, i, j| x.deriv(i, j, w);
    let nz = |x: ExpRational, s: &str| if x.is_zero() { Err(Error::PivotZero(s.into())) } else { Ok(x) };
    let p10 = nz(nv(&n, "+10"), "+1.0")?;

    let v = &(&d(&nv(&n, "-13"), 1, 3) + &(&nv(&n, "-01") * &nv(&n, "-12")).scale(&qi(3)));
    n.put("-23", -div(v, &p10.scale(&qi(3))));
    let v = &(&(&(&nv(&n, "+23") * &nv(&n, "-12")) + &(&nv(&n, "+12") * &nv(&n, "-01")).scale(&qi(2))) - &d(&nv(&n, "+11"), 1, 1));
    n.put("+01", div(v, &p10));
    let v = &(&(&d(&nv(&n, "-01"), 0, 1) - &(&nv(&n, "-13") * &nv(&n, "+12"))) - &(&nv(&n, "-12") * &nv(&n, "+11")).scale(&qi(2)));
    n.put("-11", div(v, &p10));
    let v = &(&d(&nv(&n, "+23"), 2, 3) + &(&nv(&n, "+11") * &nv(&n, "+12")).scale(&qi(3)));
    n.put("+13", div(v, &p10.scale(&qi(3))));
    let m01 = nz(nv(&n, "-01"), "-0.1 (transformed)")?;
    let v = &(&(&(&nv(&n, "-23") * &nv(&n, "+12")) + &(&nv(&n, "-12") * &nv(&n, "+01")).scale(&qi(2))) - &d(&nv(&n, "-11"), 1, 1));
    n.put("-10", div(v, &m01));
    Ok(n)
}

/// `T_{α1+3α2} = χ ∘ S⁻¹ ∘ T1 ∘ S` with `S` the G2 exchange symmetry, under
/// which `T1`'s pivot `f^-_{1.0}` is the original `f^-_{1.3}`, and `χ` the
/// grading gauge `f^±_{p.q} → (−1)^{p+q} f^±_{p.q}` that aligns the result
/// with the printed algebraic relations.
fn g2_ta13(f: &FieldConfig) -> Result<FieldConfig, Error> {
    if f.g("-13").is_zero() {
        return Err(Error::PivotZero("-1.3".into()));
    }
    let s = g2_symmetry::apply(f);
    let t = g2_symmetry::apply_inverse(&g2_t1(&s)?);
    let mut out = t.clone();
    for (r, v) in t.fields() {
        if (r.p + r.q) % 2 == 1 {
            out.set(*r, -v)?;
        }
    }
    Ok(out)
}

/// The seven algebraic relations of `T_{α1+3α2}` as printed, for
/// reconciliation against the shipped substitution path.
pub fn g2_ta13_printed_algebraic(f: &FieldConfig) -> Result<Vec<(RootLabel, ExpRational)>, Error> {
    let c = Ctx { f };
    let a = c.piv("-13")?;
    let l = crate::wavesys::l;
    Ok(vec![
        (l("+13"), a.recip()?),
        (l("+01"), div(&c.v("-12"), &a)),
        (l("+12"), -div(&c.v("-01"), &a)),
        (l("-10"), div(&c.v("-23"), &a)),
        (l("+23"), -div(&c.v("+10"), &a)),
        (l("+11"), &c.v("+11") + &div(&(&c.v("-01").pow(2) + &(&c.v("-12") * &c.v("+10"))), &a)),
        (l("-11"), &c.v("-11") + &div(&(&-c.v("-12").pow(2) + &(&c.v("-23") * &c.v("-01"))), &a)),
    ])
}

/// Closed forms printed for the B2 second-root map on general inputs
/// (fields `f^-_{1.0}, f^-_{1.1}, f^+_{0.1}, f^+_{1.2}, f^+_{1.1}`).
pub fn b2_t2a2_printed(f: &FieldConfig) -> Result<Vec<(RootLabel, ExpRational)>, Error> {
    let c = Ctx { f };
    let m12 = c.piv("-12")?;
    let (m01, m11, p10, p11) = (c.v("-01"), c.v("-11"), c.v("+10"), c.v("+11"));
    let s = &p10 + &div(&m01.pow(2), &m12);
    if s.is_zero() {
        return Err(Error::PivotZero("+1.0 + (f-0.1)^2/f-1.2".into()));
    }
    let sm = &(&p10 * &m12) + &m01.pow(2);
    let l = crate::wavesys::l;
    let h = k(1, 2);
    let num11 = &(&-c.d(&m01, 1, 0) - &(&p11 * &m12)) + &(&m01 * &c.dln(&m12, 1, 0)).scale(&h);
    let num_p11 = &(&(&p10 * &c.d(&m01, 1, 2)) - &(&m11 * &p10.pow(2))) - &(&m01 * &c.d(&p10, 1, 2)).scale(&h);
    Ok(vec![
        (l("-10"), s.recip()?),
        (l("-11"), div(&num11, &s)),
        (l("+01"), div(&m01, &sm)),
        (l("+12"), div(&p10, &sm)),
        (l("+11"), div(&num_p11, &s)),
    ])
}

/// Printed post-substitution forms (valid when `f^+_{1.0} = f^+_{1.1} =
/// f^+_{1.2} = 0`): `f̃^-_{0.1}` via the Toda relation and `f̃^-_{1.2}`.
pub fn b2_t2a2_printed_reduced(f: &FieldConfig) -> Result<Vec<(RootLabel, ExpRational)>, Error> {
    let c = Ctx { f };
    let m01 = c.piv("-01")?;
    let (m11, m12, p01) = (c.v("-11"), c.v("-12"), c.v("+01"));
    let l = crate::wavesys::l;
    let toda = &m01 * &(&c.d(&c.dln(&m01, 1, 0), 1, 0) + &(&m01 * &p01));
    let dm01 = c.d(&m01, 1, 0);
    let mut t12 = c.d(&c.d(&m12, 1, 0), 1, 0).scale(&k(1, 4));
    t12 = &t12 + &(&(&m11 * &dm01) - &(&m01 * &c.d(&m11, 1, 0))).scale(&k(1, 2));
    t12 = &t12 + &(&div(&(&dm01 * &dm01), &m01.pow(2)) * &m12);
    t12 = &t12 - &div(&(&dm01 * &c.d(&m12, 1, 0)), &m01);
    t12 = &t12 + &(&(&p01 * &m01) * &m12);
    Ok(vec![(l("-01"), toda), (l("-12"), t12)])
}
