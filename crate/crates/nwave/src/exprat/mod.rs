//! Exponential polynomials `Σ cᵢ·exp(aᵢ t + bᵢ x)` with exact rational data,
//! their reduced ratios, and the characteristic derivatives `D_{i,j}`.

mod eval;
mod gcd;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

pub use eval::{EvalConfig, DEFAULT_POLE_THRESHOLD};

/// Shorthand for an exact rational.
pub type Q = BigRational;

/// Builds the rational `n/d`. Panics on `d == 0`.
pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer rational `n`.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Exponent `a·t + b·x`. Ordered lexicographically on `(a, b)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinForm {
    pub a: Q,
    pub b: Q,
}

impl LinForm {
    pub fn new(a: Q, b: Q) -> Self {
        LinForm { a, b }
    }

    pub fn zero() -> Self {
        LinForm { a: Q::zero(), b: Q::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn scaled(&self, k: &Q) -> Self {
        LinForm {
            a: &self.a * k,
            b: &self.b * k,
        }
    }
}

impl Add for &LinForm {
    type Output = LinForm;
    fn add(self, o: &LinForm) -> LinForm {
        LinForm {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
        }
    }
}

impl Sub for &LinForm {
    type Output = LinForm;
    fn sub(self, o: &LinForm) -> LinForm {
        LinForm {
            a: &self.a - &o.a,
            b: &self.b - &o.b,
        }
    }
}

/// Wave-speed constants of the two simple roots; `delta = c1·d2 − c2·d1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WaveConstants {
    pub c1: Q,
    pub c2: Q,
    pub d1: Q,
    pub d2: Q,
    pub delta: Q,
}

impl WaveConstants {
    pub fn new(c1: Q, c2: Q, d1: Q, d2: Q) -> Result<Self, Error> {
        let delta = &c1 * &d2 - &c2 * &d1;
        if delta.is_zero() {
            return Err(Error::InvalidSpectralData("wave constants have delta = c1*d2 - c2*d1 = 0".into()));
        }
        Ok(WaveConstants { c1, c2, d1, d2, delta })
    }

    /// Exponent direction `d_r t − c_r x` of simple root `r ∈ {1, 2}`.
    pub fn root_form(&self, r: usize) -> LinForm {
        match r {
            1 => LinForm::new(self.d1.clone(), -self.c1.clone()),
            2 => LinForm::new(self.d2.clone(), -self.c2.clone()),
            _ => panic!("simple root index must be 1 or 2"),
        }
    }

    /// Multiplier that `D_{i,j}` applies to `exp(a t + b x)`.
    pub fn deriv_factor(&self, i: i64, j: i64, e: &LinForm) -> Q {
        let (i, j) = (qi(i), qi(j));
        let ct = &i * &self.c1 + &j * &self.c2;
        let cx = &i * &self.d1 + &j * &self.d2;
        (ct * &e.a + cx * &e.b) / &self.delta
    }
}

/// Finite sum of nonzero rational coefficients times exponentials.
/// The empty map is zero; representation is canonical.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ExpPoly {
    terms: BTreeMap<LinForm, Q>,
}

impl ExpPoly {
    pub fn zero() -> Self {
        ExpPoly::default()
    }

    pub fn one() -> Self {
        ExpPoly::constant(qi(1))
    }

    pub fn constant(c: Q) -> Self {
        ExpPoly::term(c, LinForm::zero())
    }

    pub fn term(c: Q, e: LinForm) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        ExpPoly { terms }
    }

    /// Builds from `(coef, exponent)` pairs, merging repeated exponents.
    pub fn from_terms<I: IntoIterator<Item = (Q, LinForm)>>(it: I) -> Self {
        let mut p = ExpPoly::zero();
        for (c, e) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: LinForm, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LinForm, &Q)> {
        self.terms.iter()
    }

    /// Coefficient of `exp(e)`, zero when absent.
    pub fn coeff(&self, e: &LinForm) -> Q {
        self.terms.get(e).cloned().unwrap_or_else(Q::zero)
    }

    /// Lexicographically least term.
    pub fn least_term(&self) -> Option<(&LinForm, &Q)> {
        self.terms.iter().next()
    }

    /// Single-term polynomials are units of the exponential ring.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Constant value if the polynomial has no exponential terms.
    pub fn as_constant(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => self.terms.get(&LinForm::zero()).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, k: &Q) -> ExpPoly {
        if k.is_zero() {
            return ExpPoly::zero();
        }
        ExpPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    /// Multiplies by `exp(s)`.
    pub fn shift(&self, s: &LinForm) -> ExpPoly {
        ExpPoly {
            terms: self.terms.iter().map(|(e, c)| (e + s, c.clone())).collect(),
        }
    }

    /// `D_{i,j}`: scales each term by `((i c1 + j c2) a + (i d1 + j d2) b)/δ`.
    pub fn deriv(&self, i: i64, j: i64, w: &WaveConstants) -> ExpPoly {
        let mut out = BTreeMap::new();
        for (e, c) in &self.terms {
            let k = w.deriv_factor(i, j, e);
            if !k.is_zero() {
                out.insert(e.clone(), c * k);
            }
        }
        ExpPoly { terms: out }
    }

    pub fn pow(&self, n: u32) -> ExpPoly {
        let mut r = ExpPoly::one();
        for _ in 0..n {
            r = &r * self;
        }
        r
    }

    /// Evaluates at an exact point with extended precision.
    pub fn eval(&self, t: &Q, x: &Q) -> f64 {
        eval::eval_poly(self, t, x)
    }

    /// Evaluates exactly when every exponent vanishes at the point.
    pub fn eval_exact_if_trivial(&self, t: &Q, x: &Q) -> Option<Q> {
        let mut s = Q::zero();
        for (e, c) in &self.terms {
            if !(&e.a * t + &e.b * x).is_zero() {
                return None;
            }
            s += c;
        }
        Some(s)
    }
}

impl Add for &ExpPoly {
    type Output = ExpPoly;
    fn add(self, o: &ExpPoly) -> ExpPoly {
        let (big, small) = if self.len() >= o.len() { (self, o) } else { (o, self) };
        let mut r = big.clone();
        for (e, c) in &small.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }
}

impl Sub for &ExpPoly {
    type Output = ExpPoly;
    fn sub(self, o: &ExpPoly) -> ExpPoly {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), -c.clone());
        }
        r
    }
}

impl Neg for &ExpPoly {
    type Output = ExpPoly;
    fn neg(self) -> ExpPoly {
        ExpPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }
}

impl Mul for &ExpPoly {
    type Output = ExpPoly;
    fn mul(self, o: &ExpPoly) -> ExpPoly {
        let mut r = ExpPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                r.add_term(e1 + e2, c1 * c2);
            }
        }
        r
    }
}

macro_rules! owned_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                &self + &o
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                &self - &o
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                &self * &o
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}

owned_ops!(ExpPoly);
owned_ops!(ExpRational);

impl fmt::Display for ExpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if e.is_zero() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}·e^({}t{}{}x)", e.a, if e.b.is_negative() { "" } else { "+" }, e.b)?;
            }
        }
        Ok(())
    }
}

/// Ratio of exponential polynomials, kept reduced: numerator and
/// denominator share no non-unit factor, and the lexicographically least
/// denominator term is exactly `1·e^0`.
#[derive(Clone, Debug)]
pub struct ExpRational {
    num: ExpPoly,
    den: ExpPoly,
}

impl ExpRational {
    pub fn zero() -> Self {
        ExpRational {
            num: ExpPoly::zero(),
            den: ExpPoly::one(),
        }
    }

    pub fn one() -> Self {
        ExpRational {
            num: ExpPoly::one(),
            den: ExpPoly::one(),
        }
    }

    pub fn constant(c: Q) -> Self {
        ExpRational {
            num: ExpPoly::constant(c),
            den: ExpPoly::one(),
        }
    }

    /// Reduces `num/den` to canonical form.
    pub fn new(num: ExpPoly, den: ExpPoly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZeroField);
        }
        if num.is_zero() {
            return Ok(ExpRational::zero());
        }
        let (num, den) = if num.is_monomial() || den.is_monomial() {
            (num, den)
        } else {
            gcd::reduce(&num, &den)
        };
        Ok(Self::anchored(num, den))
    }

    fn anchored(num: ExpPoly, den: ExpPoly) -> Self {
        let (e, c) = den.least_term().expect("nonzero denominator");
        if e.is_zero() && c.is_one() {
            return ExpRational { num, den };
        }
        let s = LinForm {
            a: -e.a.clone(),
            b: -e.b.clone(),
        };
        let k = c.recip();
        ExpRational {
            num: num.shift(&s).scale(&k),
            den: den.shift(&s).scale(&k),
        }
    }

    pub fn num(&self) -> &ExpPoly {
        &self.num
    }

    pub fn den(&self) -> &ExpPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the value is an `ExpPoly` (denominator is one).
    pub fn as_poly(&self) -> Option<&ExpPoly> {
        if self.den.is_monomial() && self.den.least_term().map(|(e, _)| e.is_zero()).unwrap_or(false) {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<Q> {
        self.as_poly().and_then(|p| p.as_constant())
    }

    /// Number of terms in numerator and denominator.
    pub fn size(&self) -> (usize, usize) {
        (self.num.len(), self.den.len())
    }

    pub fn scale(&self, k: &Q) -> ExpRational {
        if k.is_zero() {
            return ExpRational::zero();
        }
        ExpRational {
            num: self.num.scale(k),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<ExpRational, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZeroField);
        }
        Ok(Self::anchored(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, o: &ExpRational) -> Result<ExpRational, Error> {
        if o.is_zero() {
            return Err(Error::DivisionByZeroField);
        }
        if o.den == self.den {
            return ExpRational::new(self.num.clone(), o.num.clone());
        }
        ExpRational::new(&self.num * &o.den, &self.den * &o.num)
    }

    /// Quotient-rule derivative `D_{i,j}`.
    pub fn deriv(&self, i: i64, j: i64, w: &WaveConstants) -> ExpRational {
        let dn = self.num.deriv(i, j, w);
        if self.den.is_monomial() {
            // den = e^0 after anchoring; its derivative vanishes
            return ExpRational::new(dn, self.den.clone()).expect("nonzero denominator");
        }
        let dd = self.den.deriv(i, j, w);
        let num = &(&dn * &self.den) - &(&self.num * &dd);
        ExpRational::new(num, &self.den * &self.den).expect("nonzero denominator")
    }

    /// `D_{i,j} ln f = D f / f`.
    pub fn log_deriv(&self, i: i64, j: i64, w: &WaveConstants) -> Result<ExpRational, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZeroField);
        }
        let dn = self.num.deriv(i, j, w);
        let dd = self.den.deriv(i, j, w);
        let num = &(&dn * &self.den) - &(&self.num * &dd);
        ExpRational::new(num, &self.num * &self.den)
    }

    pub fn pow(&self, n: u32) -> ExpRational {
        ExpRational {
            num: self.num.pow(n),
            den: self.den.pow(n),
        }
    }

    /// Extended-precision evaluation; fails with `EvalPole` when the
    /// denominator magnitude falls below the configured threshold.
    pub fn eval(&self, t: &Q, x: &Q) -> Result<f64, Error> {
        self.eval_with(t, x, &EvalConfig::default())
    }

    pub fn eval_with(&self, t: &Q, x: &Q, cfg: &EvalConfig) -> Result<f64, Error> {
        eval::eval_ratio(&self.num, &self.den, t, x, cfg)
    }
}

impl From<ExpPoly> for ExpRational {
    fn from(p: ExpPoly) -> Self {
        ExpRational { num: p, den: ExpPoly::one() }
    }
}

impl PartialEq for ExpRational {
    fn eq(&self, o: &ExpRational) -> bool {
        if self.den == o.den {
            return self.num == o.num;
        }
        &self.num * &o.den == &o.num * &self.den
    }
}

impl Eq for ExpRational {}

impl Add for &ExpRational {
    type Output = ExpRational;
    fn add(self, o: &ExpRational) -> ExpRational {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return ExpRational::new(&self.num + &o.num, self.den.clone()).expect("nonzero denominator");
        }
        let num = &(&self.num * &o.den) + &(&o.num * &self.den);
        ExpRational::new(num, &self.den * &o.den).expect("nonzero denominator")
    }
}

impl Sub for &ExpRational {
    type Output = ExpRational;
    fn sub(self, o: &ExpRational) -> ExpRational {
        self + &(-o)
    }
}

impl Neg for &ExpRational {
    type Output = ExpRational;
    fn neg(self) -> ExpRational {
        ExpRational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &ExpRational {
    type Output = ExpRational;
    fn mul(self, o: &ExpRational) -> ExpRational {
        if self.is_zero() || o.is_zero() {
            return ExpRational::zero();
        }
        ExpRational::new(&self.num * &o.num, &self.den * &o.den).expect("nonzero denominator")
    }
}

impl fmt::Display for ExpRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_poly() {
            Some(p) => write!(f, "{p}"),
            None => write!(f, "({}) / ({})", self.num, self.den),
        }
    }
}

/// Free-function forms of the ratio operations.
pub fn radd(f: &ExpRational, g: &ExpRational) -> ExpRational {
    f + g
}

pub fn rmul(f: &ExpRational, g: &ExpRational) -> ExpRational {
    f * g
}

pub fn rdiv(f: &ExpRational, g: &ExpRational) -> Result<ExpRational, Error> {
    f.checked_div(g)
}

pub fn rderiv(f: &ExpRational, i: i64, j: i64, w: &WaveConstants) -> ExpRational {
    f.deriv(i, j, w)
}

pub fn is_zero(f: &ExpRational) -> bool {
    f.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w() -> WaveConstants {
        WaveConstants::new(qi(1), q(1, 2), q(1, 3), qi(1)).unwrap()
    }

    fn et() -> ExpPoly {
        ExpPoly::term(qi(1), LinForm::new(qi(1), qi(0)))
    }

    fn ex() -> ExpPoly {
        ExpPoly::term(qi(1), LinForm::new(qi(0), qi(1)))
    }

    #[test]
    fn add_identity_and_cancellation() {
        let f = &et() + &ex();
        assert_eq!(&f + &ExpPoly::zero(), f);
        assert!((&et().scale(&qi(2)) + &et().scale(&qi(-2))).is_zero());
        assert_eq!(f.len(), 2);
    }

    #[test]
    fn mul_exponents_and_binomial() {
        let a = ExpPoly::term(qi(1), LinForm::new(q(1, 2), qi(0)));
        let b = ExpPoly::term(qi(1), LinForm::new(q(3, 2), qi(0)));
        assert_eq!(&a * &b, ExpPoly::term(qi(1), LinForm::new(qi(2), qi(0))));
        assert!((&a * &ExpPoly::zero()).is_zero());
        let s = &et() + &ex();
        let sq = &s * &s;
        assert_eq!(sq.len(), 3);
        assert_eq!(sq.coeff(&LinForm::new(qi(1), qi(1))), qi(2));
    }

    #[test]
    fn deriv_of_simple_root_exponentials() {
        let w = w();
        let lam = qi(3);
        let e = w.root_form(1).scaled(&lam);
        let f = ExpPoly::term(qi(1), e.clone());
        assert!(f.deriv(1, 0, &w).is_zero());
        assert_eq!(f.deriv(0, 1, &w), ExpPoly::term(-lam, e));
        assert!(ExpPoly::constant(qi(7)).deriv(1, 1, &w).is_zero());
    }

    #[test]
    fn ratio_basics() {
        let w = w();
        let f: ExpRational = (&et() + &ExpPoly::one()).into();
        assert_eq!(rdiv(&f, &f).unwrap(), ExpRational::one());
        assert!(ExpRational::constant(q(5, 3)).deriv(1, 2, &w).is_zero());
        let g: ExpRational = (&et() + &ex()).into();
        assert_eq!(g.deriv(0, 1, &w), ExpRational::from((&et() + &ex()).deriv(0, 1, &w)));
        assert!(matches!(rdiv(&f, &ExpRational::zero()), Err(Error::DivisionByZeroField)));
    }

    #[test]
    fn reduction_cancels_common_factor() {
        // (e^{2t} − 1)/(e^{t} − 1) = e^{t} + 1
        let one = ExpPoly::one();
        let e2 = ExpPoly::term(qi(1), LinForm::new(qi(2), qi(0)));
        let r = ExpRational::new(&e2 - &one, &et() - &one).unwrap();
        assert_eq!(r.as_poly(), Some(&(&et() + &one)));
    }

    #[test]
    fn anchor_normalizes_denominator() {
        let den = ExpPoly::term(qi(4), LinForm::new(qi(2), qi(1)));
        let r = ExpRational::new(et(), den).unwrap();
        assert_eq!(r.den(), &ExpPoly::one());
        assert_eq!(r.num(), &ExpPoly::term(q(1, 4), LinForm::new(qi(-1), qi(-1))));
    }

    #[test]
    fn eval_basics() {
        let z = qi(0);
        assert_eq!(ExpRational::one().eval(&qi(3), &q(-1, 2)).unwrap(), 1.0);
        assert!((ExpRational::from(et()).eval(&z, &z).unwrap() - 1.0).abs() < 1e-15);
        let r = ExpRational::new(ExpPoly::one(), &et() - &et().scale(&qi(1))).err();
        assert!(matches!(r, Some(Error::DivisionByZeroField)));
    }
}
