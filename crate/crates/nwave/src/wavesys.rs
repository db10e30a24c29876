//! Static models of the A2, B2, G2 wave systems and their residuals.
//!
//! Every equation has the form `D_{p,q} f^±_{p.q} = Σ c · f_a · f_b` and is
//! stored as data so that the verifier and the transformation engine share
//! one source of truth.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::exprat::{qi, ExpRational, WaveConstants, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Algebra {
    A2,
    B2,
    G2,
}

impl Algebra {
    pub const ALL: [Algebra; 3] = [Algebra::A2, Algebra::B2, Algebra::G2];

    pub fn positive_roots(self) -> &'static [(u8, u8)] {
        match self {
            Algebra::A2 => &[(1, 0), (0, 1), (1, 1)],
            Algebra::B2 => &[(1, 0), (0, 1), (1, 1), (1, 2)],
            Algebra::G2 => &[(1, 0), (0, 1), (1, 1), (1, 2), (1, 3), (2, 3)],
        }
    }

    pub fn cartan(self) -> [[i64; 2]; 2] {
        match self {
            Algebra::A2 => [[2, -1], [-1, 2]],
            Algebra::B2 => [[2, -2], [-1, 2]],
            Algebra::G2 => [[2, -3], [-1, 2]],
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Algebra::A2 => "A2",
            Algebra::B2 => "B2",
            Algebra::G2 => "G2",
        };
        f.write_str(s)
    }
}

impl FromStr for Algebra {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_uppercase().as_str() {
            "A2" => Ok(Algebra::A2),
            "B2" => Ok(Algebra::B2),
            "G2" => Ok(Algebra::G2),
            _ => Err(Error::Input(format!("unknown algebra '{s}'"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// The field `f^sign_{p.q}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootLabel {
    pub sign: Sign,
    pub p: u8,
    pub q: u8,
}

impl RootLabel {
    pub const fn new(sign: Sign, p: u8, q: u8) -> Self {
        RootLabel { sign, p, q }
    }

    pub fn plus(p: u8, q: u8) -> Self {
        RootLabel::new(Sign::Plus, p, q)
    }

    pub fn minus(p: u8, q: u8) -> Self {
        RootLabel::new(Sign::Minus, p, q)
    }

    pub fn flipped(self) -> Self {
        RootLabel {
            sign: self.sign.flip(),
            ..self
        }
    }

    pub fn root(self) -> (u8, u8) {
        (self.p, self.q)
    }

    /// Parses `+1.0`, `f-1.2`, or the compact `+10`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let bad = || Error::Input(format!("bad root label '{s}'"));
        let t = s.strip_prefix('f').unwrap_or(s);
        let mut it = t.chars();
        let sign = match it.next() {
            Some('+') => Sign::Plus,
            Some('-') => Sign::Minus,
            _ => return Err(bad()),
        };
        let digits: Vec<u8> = it
            .filter(|c| *c != '.' && *c != '_')
            .map(|c| c.to_digit(10).map(|d| d as u8))
            .collect::<Option<_>>()
            .ok_or_else(bad)?;
        if digits.len() != 2 {
            return Err(bad());
        }
        Ok(RootLabel::new(sign, digits[0], digits[1]))
    }
}

impl fmt::Display for RootLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign == Sign::Plus { '+' } else { '-' };
        write!(f, "{}{}.{}", s, self.p, self.q)
    }
}

/// Compact label constructor for internal tables: `l("+10")`.
pub(crate) fn l(s: &str) -> RootLabel {
    RootLabel::parse(s).expect("static label")
}

#[derive(Clone, Debug, PartialEq)]
pub struct EquationSpec {
    pub lhs: RootLabel,
    pub d_index: (i64, i64),
    pub rhs: Vec<(Q, RootLabel, RootLabel)>,
}

#[derive(Clone, Debug)]
pub struct AlgebraModel {
    pub name: Algebra,
    pub cartan: [[i64; 2]; 2],
    pub roots: Vec<RootLabel>,
    pub equations: Vec<EquationSpec>,
}

impl AlgebraModel {
    pub fn equation(&self, lhs: RootLabel) -> Option<&EquationSpec> {
        self.equations.iter().find(|e| e.lhs == lhs)
    }
}

type Row = (&'static str, &'static [(i64, &'static str, &'static str)]);

const A2_EQS: &[Row] = &[
    ("+10", &[(1, "+11", "-01")]),
    ("-10", &[(1, "-11", "+01")]),
    ("+01", &[(1, "+11", "-10")]),
    ("-01", &[(1, "-11", "+10")]),
    ("+11", &[(-1, "+01", "+10")]),
    ("-11", &[(-1, "-01", "-10")]),
];

const B2_EQS: &[Row] = &[
    ("+10", &[(2, "+11", "-01")]),
    ("-10", &[(2, "-11", "+01")]),
    ("+01", &[(1, "+11", "-10"), (1, "+12", "-11")]),
    ("-01", &[(1, "-11", "+10"), (1, "-12", "+11")]),
    ("+11", &[(-1, "+01", "+10"), (1, "+12", "-01")]),
    ("-11", &[(-1, "-01", "-10"), (1, "-12", "+01")]),
    ("+12", &[(-2, "+11", "+01")]),
    ("-12", &[(-2, "-11", "-01")]),
];

const G2_EQS: &[Row] = &[
    ("+23", &[(3, "+10", "+13"), (-3, "+11", "+12")]),
    ("-23", &[(3, "-10", "-13"), (-3, "-11", "-12")]),
    ("+13", &[(-3, "+23", "-10"), (-3, "+01", "+12")]),
    ("-13", &[(-3, "+10", "-23"), (-3, "-01", "-12")]),
    ("+12", &[(1, "+23", "-11"), (1, "+13", "-01"), (-2, "+01", "+11")]),
    ("-12", &[(1, "-23", "+11"), (1, "-13", "+01"), (-2, "-01", "-11")]),
    ("+11", &[(1, "+23", "-12"), (2, "+12", "-01"), (-1, "+01", "+10")]),
    ("-11", &[(1, "-23", "+12"), (2, "-12", "+01"), (-1, "-01", "-10")]),
    ("+10", &[(-3, "+23", "-13"), (3, "+11", "-01")]),
    ("-10", &[(-3, "-23", "+13"), (3, "-11", "+01")]),
    ("+01", &[(1, "+13", "-12"), (2, "+12", "-11"), (1, "+11", "-10")]),
    ("-01", &[(1, "-13", "+12"), (2, "-12", "+11"), (1, "-11", "+10")]),
];

/// The static model of one algebra.
pub fn model(name: Algebra) -> AlgebraModel {
    let rows = match name {
        Algebra::A2 => A2_EQS,
        Algebra::B2 => B2_EQS,
        Algebra::G2 => G2_EQS,
    };
    let equations = rows
        .iter()
        .map(|(lhs, rhs)| {
            let lhs = l(lhs);
            EquationSpec {
                lhs,
                d_index: (lhs.p as i64, lhs.q as i64),
                rhs: rhs.iter().map(|(c, a, b)| (qi(*c), l(a), l(b))).collect(),
            }
        })
        .collect();
    let roots = name
        .positive_roots()
        .iter()
        .flat_map(|&(p, q)| [RootLabel::plus(p, q), RootLabel::minus(p, q)])
        .collect();
    AlgebraModel {
        name,
        cartan: name.cartan(),
        roots,
        equations,
    }
}

/// Assignment of a field value to every root label of one algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldConfig {
    pub algebra: Algebra,
    pub constants: WaveConstants,
    fields: BTreeMap<RootLabel, ExpRational>,
}

impl FieldConfig {
    /// All fields zero.
    pub fn zero(algebra: Algebra, constants: WaveConstants) -> Self {
        let fields = model(algebra).roots.into_iter().map(|r| (r, ExpRational::zero())).collect();
        FieldConfig { algebra, constants, fields }
    }

    pub fn get(&self, r: RootLabel) -> &ExpRational {
        self.fields.get(&r).unwrap_or_else(|| panic!("label {r} not in {}", self.algebra))
    }

    /// Short form for internal formula code: `f.g("-10")`.
    pub(crate) fn g(&self, s: &str) -> &ExpRational {
        self.get(l(s))
    }

    pub fn set(&mut self, r: RootLabel, v: ExpRational) -> Result<(), Error> {
        match self.fields.get_mut(&r) {
            Some(slot) => {
                *slot = v;
                Ok(())
            }
            None => Err(Error::Input(format!("label {r} not in {}", self.algebra))),
        }
    }

    pub(crate) fn put(&mut self, s: &str, v: ExpRational) {
        self.set(l(s), v).expect("static label");
    }

    pub fn fields(&self) -> impl Iterator<Item = (&RootLabel, &ExpRational)> {
        self.fields.iter()
    }

    /// Labels whose values differ from `other` (same algebra assumed).
    pub fn diff_labels(&self, other: &FieldConfig) -> Vec<RootLabel> {
        self.fields.iter().filter(|(k, v)| other.fields.get(k) != Some(*v)).map(|(k, _)| *k).collect()
    }
}

/// `D_{i,j} f_lhs − Σ c·f_a·f_b` for one equation.
pub fn residual(cfg: &FieldConfig, e: &EquationSpec) -> ExpRational {
    let w = &cfg.constants;
    let mut r = cfg.get(e.lhs).deriv(e.d_index.0, e.d_index.1, w);
    for (c, a, b) in &e.rhs {
        let t = (cfg.get(*a) * cfg.get(*b)).scale(c);
        r = &r - &t;
    }
    r
}

/// Residuals of every equation of the model.
pub fn residuals(m: &AlgebraModel, cfg: &FieldConfig) -> Vec<(RootLabel, ExpRational)> {
    m.equations.iter().map(|e| (e.lhs, residual(cfg, e))).collect()
}

/// Labels of equations with a nonzero residual.
pub fn failing_equations(cfg: &FieldConfig) -> Vec<RootLabel> {
    let m = model(cfg.algebra);
    residuals(&m, cfg).into_iter().filter(|(_, r)| !r.is_zero()).map(|(l, _)| l).collect()
}

/// Factor pairs are unordered; normalize for structural comparison.
fn canon_rhs(rhs: &[(Q, RootLabel, RootLabel)]) -> Vec<(Q, RootLabel, RootLabel)> {
    let mut v: Vec<_> = rhs
        .iter()
        .map(|(c, a, b)| if a <= b { (c.clone(), *a, *b) } else { (c.clone(), *b, *a) })
        .collect();
    v.sort();
    v
}

/// Swapping every `f^+ ↔ f^-` maps the equation set onto itself.
pub fn sign_symmetric(m: &AlgebraModel) -> bool {
    m.equations.iter().all(|e| match m.equation(e.lhs.flipped()) {
        Some(o) => {
            let mapped: Vec<_> = e.rhs.iter().map(|(c, a, b)| (c.clone(), a.flipped(), b.flipped())).collect();
            o.d_index == e.d_index && canon_rhs(&o.rhs) == canon_rhs(&mapped)
        }
        None => false,
    })
}

/// The G2 exchange symmetry: `g_{π(X)} = σ_X f_X` together with
/// `D'_{i,j} = D_{i,3i−j}`. Roots map `2.3→2.3`, `1.3↔1.0`, `1.1↔1.2`, and
/// `0.1→0.1` with the sign of the field swapped.
pub mod g2_symmetry {
    use super::*;

    pub fn image(r: RootLabel) -> RootLabel {
        let (p, q) = match (r.p, r.q) {
            (1, 3) => (1, 0),
            (1, 0) => (1, 3),
            (1, 1) => (1, 2),
            (1, 2) => (1, 1),
            other => other,
        };
        let sign = if (r.p, r.q) == (0, 1) { r.sign.flip() } else { r.sign };
        RootLabel::new(sign, p, q)
    }

    pub fn sigma(r: RootLabel) -> i64 {
        match (r.p, r.q) {
            (1, 1) | (1, 3) | (2, 3) => -1,
            _ => 1,
        }
    }

    /// Constants realizing `D'_{i,j} = D_{i,3i−j}`.
    pub fn constants(w: &WaveConstants) -> WaveConstants {
        let three = qi(3);
        WaveConstants::new(-&w.c1 - &three * &w.c2, w.c2.clone(), -&w.d1 - &three * &w.d2, w.d2.clone()).expect("delta flips sign only")
    }

    /// Applies the substitution to a G2 configuration.
    pub fn apply(cfg: &FieldConfig) -> FieldConfig {
        let mut out = FieldConfig::zero(Algebra::G2, constants(&cfg.constants));
        for (r, v) in cfg.fields() {
            out.set(image(*r), v.scale(&qi(sigma(*r)))).expect("G2 label");
        }
        out
    }

    /// Inverse substitution `f_X = σ_X g_{π(X)}`. Applying `apply` twice
    /// differs from the identity by the gauge `χ(α1) = −1, χ(α2) = 1`.
    pub fn apply_inverse(cfg: &FieldConfig) -> FieldConfig {
        let mut out = FieldConfig::zero(Algebra::G2, constants(&cfg.constants));
        for (r, _) in cfg.fields() {
            out.set(*r, cfg.get(image(*r)).scale(&qi(sigma(*r)))).expect("G2 label");
        }
        out
    }

    /// Structural check that the substitution maps the encoded equation set
    /// onto itself.
    pub fn is_symmetry(m: &AlgebraModel) -> bool {
        m.equations.iter().all(|e| {
            // equation for Y = π(X) in g-variables, rewritten in f-variables
            let x = e.lhs;
            let Some(ey) = m.equation(image(x)) else { return false };
            let (i, j) = ey.d_index;
            let idx = (i, 3 * i - j);
            let dir = if idx == e.d_index {
                1
            } else if (-idx.0, -idx.1) == e.d_index {
                -1
            } else {
                return false;
            };
            let pre = |y: RootLabel| m.roots.iter().copied().find(|r| image(*r) == y).expect("bijection");
            let mapped: Vec<_> = ey
                .rhs
                .iter()
                .map(|(c, a, b)| {
                    let (fa, fb) = (pre(*a), pre(*b));
                    let k = dir * sigma(fa) * sigma(fb) * sigma(x);
                    (c * qi(k), fa, fb)
                })
                .collect();
            canon_rhs(&mapped) == canon_rhs(&e.rhs)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn label_parse_roundtrip() {
        for s in ["+1.0", "-2.3", "f-1.2"] {
            let r = RootLabel::parse(s).unwrap();
            assert_eq!(RootLabel::parse(&r.to_string()).unwrap(), r);
        }
        assert_eq!(l("+12"), RootLabel::plus(1, 2));
        assert!(RootLabel::parse("x10").is_err());
    }

    #[test]
    fn equation_counts_and_indices() {
        assert_eq!(model(Algebra::A2).equations.len(), 6);
        assert_eq!(model(Algebra::B2).equations.len(), 8);
        assert_eq!(model(Algebra::G2).equations.len(), 12);
        for a in Algebra::ALL {
            let m = model(a);
            assert_eq!(m.roots.len(), m.equations.len());
            for e in &m.equations {
                assert_eq!(e.d_index, (e.lhs.p as i64, e.lhs.q as i64));
                assert!(m.roots.contains(&e.lhs));
            }
        }
    }

    #[test]
    fn cartan_matrices() {
        assert_eq!(model(Algebra::A2).cartan, [[2, -1], [-1, 2]]);
        assert_eq!(model(Algebra::B2).cartan, [[2, -2], [-1, 2]]);
        assert_eq!(model(Algebra::G2).cartan, [[2, -3], [-1, 2]]);
    }

    #[test]
    fn sign_symmetry_holds() {
        for a in Algebra::ALL {
            assert!(sign_symmetric(&model(a)), "{a}");
        }
    }

    #[test]
    fn g2_substitution_structural() {
        assert!(g2_symmetry::is_symmetry(&model(Algebra::G2)));
    }

    #[test]
    fn g2_substitution_involution() {
        for r in model(Algebra::G2).roots {
            assert_eq!(g2_symmetry::image(g2_symmetry::image(r)), r);
        }
    }
}
