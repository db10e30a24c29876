//! Common-factor removal for `num/den`.
//!
//! All exponents of both polynomials span a lattice of rank ≤ 2 in Q².
//! In lattice coordinates each polynomial becomes an ordinary polynomial in
//! `Q[X][Y]` (after shifting away negative degrees, which are units). The
//! gcd is found by the heuristic evaluation/interpolation method over Z,
//! with a primitive remainder sequence over `Q[X]` as the fallback.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{ExpPoly, LinForm, Q};

/// Divides `num` and `den` by their greatest common divisor.
pub(crate) fn reduce(num: &ExpPoly, den: &ExpPoly) -> (ExpPoly, ExpPoly) {
    let lat = Lattice::spanning(num.terms().chain(den.terms()).map(|(e, _)| e));
    let (a, sa) = lat.to_bivariate(num);
    let (b, sb) = lat.to_bivariate(den);
    let (za, ka) = to_integer(&a);
    let (zb, kb) = to_integer(&b);
    if let Some((h, ca, cb)) = zb_heu_gcd(&za, &zb) {
        if zb_is_constant(&h) {
            return (num.clone(), den.clone());
        }
        let qa = from_integer(&ca, &kb);
        let qb = from_integer(&cb, &ka);
        return (lat.to_exp_poly(&qa, sa), lat.to_exp_poly(&qb, sb));
    }
    let g = bi_gcd(&a, &b);
    if bi_is_constant(&g) {
        return (num.clone(), den.clone());
    }
    match (bi_div_exact(&a, &g), bi_div_exact(&b, &g)) {
        (Some(qa), Some(qb)) => (lat.to_exp_poly(&qa, sa), lat.to_exp_poly(&qb, sb)),
        // Unreachable for a correct gcd; keep the unreduced (still valid) form.
        _ => (num.clone(), den.clone()),
    }
}

/// Lattice in Z² spanned by the exponent differences (rational exponents
/// scaled by their common denominator `scale`), with a Lagrange-reduced
/// basis `b1`, `b2` so that dense degrees stay small. Exponents are
/// `base + k1·b1 + k2·b2`; a zero `b2` (or both) means lower rank.
struct Lattice {
    scale: BigInt,
    base: (BigInt, BigInt),
    b1: (BigInt, BigInt),
    b2: (BigInt, BigInt),
}

type V2 = (BigInt, BigInt);

fn dot(a: &V2, b: &V2) -> BigInt {
    &a.0 * &b.0 + &a.1 * &b.1
}

fn is_zero2(a: &V2) -> bool {
    a.0.is_zero() && a.1.is_zero()
}

/// Nearest integer to `n/d`, `d > 0`.
fn round_div(n: &BigInt, d: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    (n * &two + d).div_floor(&(d * &two))
}

impl Lattice {
    fn spanning<'a, I: Iterator<Item = &'a LinForm>>(exps: I) -> Lattice {
        let exps: Vec<&LinForm> = exps.collect();
        let mut scale = BigInt::one();
        for e in &exps {
            scale = scale.lcm(e.a.denom()).lcm(e.b.denom());
        }
        let z = || (BigInt::zero(), BigInt::zero());
        let mut lat = Lattice {
            scale,
            base: z(),
            b1: z(),
            b2: z(),
        };
        let Some(first) = exps.first() else { return lat };
        lat.base = lat.int_coords(first);
        // Hermite form: r1 = (r1x, r1y), (0, g2)
        let (mut r1x, mut r1y, mut g2) = (BigInt::zero(), BigInt::zero(), BigInt::zero());
        for e in &exps[1..] {
            let (x, y) = lat.int_coords(e);
            let (x, y) = (x - &lat.base.0, y - &lat.base.1);
            if x.is_zero() {
                g2 = g2.gcd(&y);
            } else if r1x.is_zero() {
                r1x = x;
                r1y = y;
            } else {
                let eg = r1x.extended_gcd(&x);
                let (g, s, t) = (eg.gcd, eg.x, eg.y);
                let ny = &s * &r1y + &t * &y;
                let elim = (&x / &g) * &r1y - (&r1x / &g) * &y;
                r1x = g;
                r1y = ny;
                g2 = g2.gcd(&elim);
            }
            if !g2.is_zero() {
                r1y = r1y.mod_floor(&g2);
            }
        }
        let (mut b1, mut b2): (V2, V2) = ((r1x, r1y), (BigInt::zero(), g2));
        if is_zero2(&b1) {
            std::mem::swap(&mut b1, &mut b2);
        }
        if !is_zero2(&b2) {
            // Lagrange–Gauss reduction
            if dot(&b1, &b1) > dot(&b2, &b2) {
                std::mem::swap(&mut b1, &mut b2);
            }
            loop {
                let m = round_div(&dot(&b1, &b2), &dot(&b1, &b1));
                b2 = (&b2.0 - &m * &b1.0, &b2.1 - &m * &b1.1);
                if dot(&b2, &b2) >= dot(&b1, &b1) {
                    break;
                }
                std::mem::swap(&mut b1, &mut b2);
            }
        }
        lat.b1 = b1;
        lat.b2 = b2;
        lat
    }

    fn int_coords(&self, e: &LinForm) -> (BigInt, BigInt) {
        let x = (&e.a * Q::from_integer(self.scale.clone())).to_integer();
        let y = (&e.b * Q::from_integer(self.scale.clone())).to_integer();
        (x, y)
    }

    /// Integer lattice coordinates of an exponent.
    fn coords(&self, e: &LinForm) -> (i64, i64) {
        let (x, y) = self.int_coords(e);
        let v = (x - &self.base.0, y - &self.base.1);
        let (k1, k2) = if is_zero2(&self.b1) {
            (BigInt::zero(), BigInt::zero())
        } else if is_zero2(&self.b2) {
            let k = if self.b1.0.is_zero() { &v.1 / &self.b1.1 } else { &v.0 / &self.b1.0 };
            (k, BigInt::zero())
        } else {
            let det = &self.b1.0 * &self.b2.1 - &self.b1.1 * &self.b2.0;
            let k1 = (&v.0 * &self.b2.1 - &v.1 * &self.b2.0) / &det;
            let k2 = (&self.b1.0 * &v.1 - &self.b1.1 * &v.0) / &det;
            (k1, k2)
        };
        (k1.to_i64().expect("lattice degree overflow"), k2.to_i64().expect("lattice degree overflow"))
    }

    fn point(&self, k1: i64, k2: i64) -> LinForm {
        let (k1, k2) = (BigInt::from(k1), BigInt::from(k2));
        let x = &self.base.0 + &k1 * &self.b1.0 + &k2 * &self.b2.0;
        let y = &self.base.1 + &k1 * &self.b1.1 + &k2 * &self.b2.1;
        LinForm::new(Q::new(x, self.scale.clone()), Q::new(y, self.scale.clone()))
    }

    fn to_bivariate(&self, p: &ExpPoly) -> (Bi, (i64, i64)) {
        let pts: Vec<((i64, i64), &Q)> = p.terms().map(|(e, c)| (self.coords(e), c)).collect();
        let m1 = pts.iter().map(|((a, _), _)| *a).min().unwrap_or(0);
        let m2 = pts.iter().map(|((_, b), _)| *b).min().unwrap_or(0);
        let mut bi: Bi = Vec::new();
        for ((a, b), c) in pts {
            let (i, j) = ((a - m1) as usize, (b - m2) as usize);
            if bi.len() <= j {
                bi.resize(j + 1, Vec::new());
            }
            let row = &mut bi[j];
            if row.len() <= i {
                row.resize(i + 1, Q::zero());
            }
            row[i] = c.clone();
        }
        (bi, (m1, m2))
    }

    fn to_exp_poly(&self, p: &Bi, shift: (i64, i64)) -> ExpPoly {
        let mut out = ExpPoly::zero();
        for (j, row) in p.iter().enumerate() {
            for (i, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    out.add_term(self.point(i as i64 + shift.0, j as i64 + shift.1), c.clone());
                }
            }
        }
        out
    }
}

/// Dense univariate polynomial over Q, lowest degree first, no trailing zeros.
type Uni = Vec<Q>;
/// Polynomial in Y with coefficients in Q[X], lowest Y-degree first.
type Bi = Vec<Uni>;

fn u_trim(p: &mut Uni) {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

fn u_is_zero(p: &Uni) -> bool {
    p.iter().all(|c| c.is_zero())
}

fn u_deg(p: &Uni) -> usize {
    p.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
}

fn u_mul(a: &Uni, b: &Uni) -> Uni {
    if u_is_zero(a) || u_is_zero(b) {
        return Vec::new();
    }
    let mut r = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                r[i + j] += x * y;
            }
        }
    }
    u_trim(&mut r);
    r
}

fn u_sub(a: &Uni, b: &Uni) -> Uni {
    let mut r = a.clone();
    if r.len() < b.len() {
        r.resize(b.len(), Q::zero());
    }
    for (i, y) in b.iter().enumerate() {
        r[i] -= y;
    }
    u_trim(&mut r);
    r
}

/// Quotient and remainder of `a / b`, `b ≠ 0`.
fn u_divrem(a: &Uni, b: &Uni) -> (Uni, Uni) {
    let mut r = a.clone();
    u_trim(&mut r);
    let db = u_deg(b);
    let lb = b[db].clone();
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut quo = vec![Q::zero(); r.len() - db];
    while !r.is_empty() && r.len() > db {
        let k = r.len() - 1 - db;
        let c = &r[r.len() - 1] / &lb;
        for (i, y) in b.iter().enumerate().take(db + 1) {
            r[i + k] -= &c * y;
        }
        quo[k] = c;
        u_trim(&mut r);
    }
    u_trim(&mut quo);
    (quo, r)
}

fn u_monic(p: &Uni) -> Uni {
    let mut p = p.clone();
    u_trim(&mut p);
    if let Some(l) = p.last().cloned() {
        for c in p.iter_mut() {
            *c /= &l;
        }
    }
    p
}

fn u_gcd(a: &Uni, b: &Uni) -> Uni {
    let (mut a, mut b) = (a.clone(), b.clone());
    u_trim(&mut a);
    u_trim(&mut b);
    while !b.is_empty() {
        let (_, r) = u_divrem(&a, &b);
        a = b;
        b = u_monic(&r);
    }
    u_monic(&a)
}

fn u_div_exact(a: &Uni, b: &Uni) -> Option<Uni> {
    let (quo, r) = u_divrem(a, b);
    if r.is_empty() {
        Some(quo)
    } else {
        None
    }
}

fn bi_trim(p: &mut Bi) {
    for c in p.iter_mut() {
        u_trim(c);
    }
    while p.last().map(|c| c.is_empty()).unwrap_or(false) {
        p.pop();
    }
}

fn bi_is_constant(p: &Bi) -> bool {
    p.len() <= 1 && p.first().map(|c| c.len() <= 1).unwrap_or(true)
}

fn bi_content(p: &Bi) -> Uni {
    let mut g: Uni = Vec::new();
    for c in p {
        if !c.is_empty() {
            g = u_gcd(&g, c);
            if g.len() == 1 {
                break;
            }
        }
    }
    g
}

fn bi_scale_div(p: &Bi, c: &Uni) -> Bi {
    p.iter()
        .map(|x| {
            if x.is_empty() {
                Vec::new()
            } else {
                u_div_exact(x, c).expect("content divides")
            }
        })
        .collect()
}

fn bi_pp(p: &Bi) -> Bi {
    let c = bi_content(p);
    if c.len() <= 1 && c.first().map(|x| x.is_one()).unwrap_or(true) {
        return p.clone();
    }
    bi_scale_div(p, &c)
}

/// Pseudo-remainder of `a` by `b` in Y.
fn bi_prem(a: &Bi, b: &Bi) -> Bi {
    let db = b.len() - 1;
    let lb = b[db].clone();
    let mut r = a.clone();
    bi_trim(&mut r);
    while !r.is_empty() && r.len() > db {
        let k = r.len() - 1 - db;
        let lr = r[r.len() - 1].clone();
        let mut nr: Bi = r.iter().map(|c| u_mul(c, &lb)).collect();
        for (i, bc) in b.iter().enumerate() {
            let t = u_mul(&lr, bc);
            nr[i + k] = u_sub(&nr[i + k], &t);
        }
        bi_trim(&mut nr);
        r = bi_pp_keep(&nr);
    }
    r
}

/// Removes the content without touching zero polynomials.
fn bi_pp_keep(p: &Bi) -> Bi {
    if p.is_empty() {
        p.clone()
    } else {
        bi_pp(p)
    }
}

fn bi_gcd(a: &Bi, b: &Bi) -> Bi {
    let mut a = a.clone();
    let mut b = b.clone();
    bi_trim(&mut a);
    bi_trim(&mut b);
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    let c = u_gcd(&bi_content(&a), &bi_content(&b));
    let (mut a, mut b) = (bi_pp(&a), bi_pp(&b));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = bi_prem(&a, &b);
        a = b;
        b = r;
    }
    let g = if a.len() == 1 { vec![vec![Q::one()]] } else { bi_pp(&a) };
    g.iter().map(|x| u_mul(x, &c)).collect()
}

fn bi_div_exact(a: &Bi, g: &Bi) -> Option<Bi> {
    let mut r = a.clone();
    bi_trim(&mut r);
    let dg = g.len() - 1;
    let lg = &g[dg];
    if r.len() <= dg {
        return if r.is_empty() { Some(Vec::new()) } else { None };
    }
    let mut quo: Bi = vec![Vec::new(); r.len() - dg];
    while !r.is_empty() {
        if r.len() <= dg {
            return None;
        }
        let k = r.len() - 1 - dg;
        let c = u_div_exact(&r[r.len() - 1], lg)?;
        for (i, gc) in g.iter().enumerate() {
            let t = u_mul(&c, gc);
            r[i + k] = u_sub(&r[i + k], &t);
        }
        quo[k] = c;
        bi_trim(&mut r);
    }
    bi_trim(&mut quo);
    Some(quo)
}

// ---------------------------------------------------------------------------
// Heuristic gcd over Z (evaluation at a large integer, integer gcd, and
// x-adic reconstruction, confirmed by trial division).

type ZUni = Vec<BigInt>;
type ZBi = Vec<ZUni>;

const HEU_TRIES: usize = 6;

/// Clears denominators: returns `(k·p, k)` with `k·p` integral.
fn to_integer(p: &Bi) -> (ZBi, BigInt) {
    let mut k = BigInt::one();
    for row in p {
        for c in row {
            k = k.lcm(c.denom());
        }
    }
    let kq = Q::from_integer(k.clone());
    let z = p.iter().map(|row| row.iter().map(|c| (c * &kq).to_integer()).collect()).collect();
    (z, k)
}

fn from_integer(p: &ZBi, k: &BigInt) -> Bi {
    let mut out: Bi = p.iter().map(|row| row.iter().map(|c| Q::from_integer(c * k)).collect()).collect();
    bi_trim(&mut out);
    out
}

fn zu_trim(p: &mut ZUni) {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

fn zb_trim(p: &mut ZBi) {
    for r in p.iter_mut() {
        zu_trim(r);
    }
    while p.last().map(|r| r.is_empty()).unwrap_or(false) {
        p.pop();
    }
}

fn zb_is_constant(p: &ZBi) -> bool {
    p.len() <= 1 && p.first().map(|r| r.len() <= 1).unwrap_or(true)
}

fn zu_content(p: &ZUni) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn zb_content(p: &ZBi) -> BigInt {
    p.iter().flatten().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn zu_norm(p: &ZUni) -> BigInt {
    p.iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero)
}

fn zb_norm(p: &ZBi) -> BigInt {
    p.iter().flatten().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero)
}

fn zu_eval(p: &ZUni, x: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Evaluates the outer variable (`Y`) at `x`.
fn zb_eval(p: &ZBi, x: &BigInt) -> ZUni {
    let n = p.iter().map(|r| r.len()).max().unwrap_or(0);
    let mut out = vec![BigInt::zero(); n];
    for row in p.iter().rev() {
        for c in out.iter_mut() {
            *c *= x;
        }
        for (i, c) in row.iter().enumerate() {
            out[i] += c;
        }
    }
    zu_trim(&mut out);
    out
}

/// Symmetric x-adic digits of `c`, lowest first.
fn digits(c: &BigInt, x: &BigInt) -> Vec<BigInt> {
    let half = x / 2;
    let mut c = c.clone();
    let mut out = Vec::new();
    while !c.is_zero() {
        let mut d = c.mod_floor(x);
        if d > half {
            d -= x;
        }
        c = (&c - &d) / x;
        out.push(d);
    }
    out
}

fn zu_interpolate(h: &BigInt, x: &BigInt) -> ZUni {
    let mut p = digits(h, x);
    zu_trim(&mut p);
    if p.last().map(|c| c.is_negative()).unwrap_or(false) {
        p = p.into_iter().map(|c| -c).collect();
    }
    p
}

fn zb_interpolate(h: &ZUni, x: &BigInt) -> ZBi {
    let mut out: ZBi = Vec::new();
    for (i, c) in h.iter().enumerate() {
        for (j, d) in digits(c, x).into_iter().enumerate() {
            if out.len() <= j {
                out.resize(j + 1, Vec::new());
            }
            if out[j].len() <= i {
                out[j].resize(i + 1, BigInt::zero());
            }
            out[j][i] = d;
        }
    }
    zb_trim(&mut out);
    let lead_neg = out.last().and_then(|r| r.last()).map(|c| c.is_negative()).unwrap_or(false);
    if lead_neg {
        out = out.into_iter().map(|r| r.into_iter().map(|c| -c).collect()).collect();
    }
    out
}

fn zu_primitive(p: ZUni) -> ZUni {
    let c = zu_content(&p);
    if c.is_zero() || c.is_one() {
        return p;
    }
    p.into_iter().map(|v| v / &c).collect()
}

fn zb_primitive(p: ZBi) -> ZBi {
    let c = zb_content(&p);
    if c.is_zero() || c.is_one() {
        return p;
    }
    p.into_iter().map(|r| r.into_iter().map(|v| v / &c).collect()).collect()
}

/// Exact quotient over Z, or `None`.
fn zu_div_exact(a: &ZUni, b: &ZUni) -> Option<ZUni> {
    let mut r = a.clone();
    zu_trim(&mut r);
    if r.is_empty() {
        return Some(Vec::new());
    }
    let db = b.len().checked_sub(1)?;
    let lb = &b[db];
    if r.len() <= db {
        return None;
    }
    let mut quo = vec![BigInt::zero(); r.len() - db];
    while !r.is_empty() {
        if r.len() <= db {
            return None;
        }
        let k = r.len() - 1 - db;
        let (c, rem) = r[r.len() - 1].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (i, y) in b.iter().enumerate() {
            r[i + k] -= &c * y;
        }
        quo[k] = c;
        zu_trim(&mut r);
    }
    Some(quo)
}

fn zu_mul(a: &ZUni, b: &ZUni) -> ZUni {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    zu_trim(&mut r);
    r
}

fn zb_div_exact(a: &ZBi, g: &ZBi) -> Option<ZBi> {
    let mut r = a.clone();
    zb_trim(&mut r);
    if r.is_empty() {
        return Some(Vec::new());
    }
    let dg = g.len().checked_sub(1)?;
    let lg = &g[dg];
    if r.len() <= dg {
        return None;
    }
    let mut quo: ZBi = vec![Vec::new(); r.len() - dg];
    while !r.is_empty() {
        if r.len() <= dg {
            return None;
        }
        let k = r.len() - 1 - dg;
        let c = zu_div_exact(&r[r.len() - 1], lg)?;
        for (i, gc) in g.iter().enumerate() {
            let t = zu_mul(&c, gc);
            let row = &mut r[i + k];
            if row.len() < t.len() {
                row.resize(t.len(), BigInt::zero());
            }
            for (m, v) in t.into_iter().enumerate() {
                row[m] -= v;
            }
            zu_trim(row);
        }
        quo[k] = c;
        zb_trim(&mut r);
    }
    Some(quo)
}

fn heu_start(fn_: &BigInt, gn: &BigInt, fl: &BigInt, gl: &BigInt) -> BigInt {
    let b: BigInt = BigInt::from(2) * fn_.min(gn).clone() + 29;
    let s: BigInt = BigInt::from(99) * b.sqrt();
    let r: BigInt = BigInt::from(2) * (fn_ / fl.abs()).min(gn / gl.abs()) + 2;
    b.min(s).max(r)
}

fn heu_next(x: &BigInt) -> BigInt {
    BigInt::from(73794) * x * x.sqrt().sqrt() / 27011
}

/// `(gcd, f/gcd, g/gcd)` of univariate integer polynomials.
fn zu_heu_gcd(f: &ZUni, g: &ZUni) -> Option<(ZUni, ZUni, ZUni)> {
    let (cf, cg) = (zu_content(f), zu_content(g));
    let c = cf.gcd(&cg);
    let f: ZUni = f.iter().map(|v| v / &c).collect();
    let g: ZUni = g.iter().map(|v| v / &c).collect();
    if f.len() <= 1 || g.len() <= 1 {
        return Some((vec![c], f, g));
    }
    let mut x = heu_start(&zu_norm(&f), &zu_norm(&g), f.last().unwrap(), g.last().unwrap());
    for _ in 0..HEU_TRIES {
        let (ff, gg) = (zu_eval(&f, &x), zu_eval(&g, &x));
        if !ff.is_zero() && !gg.is_zero() {
            let h = ff.gcd(&gg);
            let hp = zu_primitive(zu_interpolate(&h, &x));
            if let (Some(a), Some(b)) = (zu_div_exact(&f, &hp), zu_div_exact(&g, &hp)) {
                return Some((hp.into_iter().map(|v| v * &c).collect(), a, b));
            }
            let cff = zu_interpolate(&(&ff / &h), &x);
            if let Some(hh) = zu_div_exact(&f, &cff) {
                if let Some(b) = zu_div_exact(&g, &hh) {
                    return Some((hh.into_iter().map(|v| v * &c).collect(), cff, b));
                }
            }
            let cfg = zu_interpolate(&(&gg / &h), &x);
            if let Some(hh) = zu_div_exact(&g, &cfg) {
                if let Some(a) = zu_div_exact(&f, &hh) {
                    return Some((hh.into_iter().map(|v| v * &c).collect(), a, cfg));
                }
            }
        }
        x = heu_next(&x);
    }
    None
}

/// `(gcd, f/gcd, g/gcd)` of bivariate integer polynomials.
fn zb_heu_gcd(f: &ZBi, g: &ZBi) -> Option<(ZBi, ZBi, ZBi)> {
    let (mut f, mut g) = (f.clone(), g.clone());
    zb_trim(&mut f);
    zb_trim(&mut g);
    if f.is_empty() || g.is_empty() {
        return None;
    }
    if f.len() == 1 && g.len() == 1 {
        let (h, a, b) = zu_heu_gcd(&f[0], &g[0])?;
        return Some((vec![h], vec![a], vec![b]));
    }
    let c = zb_content(&f).gcd(&zb_content(&g));
    let f: ZBi = f.iter().map(|r| r.iter().map(|v| v / &c).collect()).collect();
    let g: ZBi = g.iter().map(|r| r.iter().map(|v| v / &c).collect()).collect();
    let scale = |p: ZBi| -> ZBi { p.into_iter().map(|r| r.into_iter().map(|v| v * &c).collect()).collect() };
    let lead = |p: &ZBi| p.last().and_then(|r| r.last()).cloned().unwrap_or_else(BigInt::one);
    let mut x = heu_start(&zb_norm(&f), &zb_norm(&g), &lead(&f), &lead(&g));
    for _ in 0..HEU_TRIES {
        let (ff, gg) = (zb_eval(&f, &x), zb_eval(&g, &x));
        if !ff.is_empty() && !gg.is_empty() {
            if let Some((h, cff, cfg)) = zu_heu_gcd(&ff, &gg) {
                let hp = zb_primitive(zb_interpolate(&h, &x));
                if let (Some(a), Some(b)) = (zb_div_exact(&f, &hp), zb_div_exact(&g, &hp)) {
                    return Some((scale(hp), a, b));
                }
                let cf = zb_interpolate(&cff, &x);
                if let Some(hh) = zb_div_exact(&f, &cf) {
                    if let Some(b) = zb_div_exact(&g, &hh) {
                        return Some((scale(hh), cf, b));
                    }
                }
                let cg = zb_interpolate(&cfg, &x);
                if let Some(hh) = zb_div_exact(&g, &cg) {
                    if let Some(a) = zb_div_exact(&f, &hh) {
                        return Some((scale(hh), a, cg));
                    }
                }
            }
        }
        x = heu_next(&x);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::super::{q, qi};
    use super::*;

    fn mono(c: i64, a: Q, b: Q) -> ExpPoly {
        ExpPoly::term(qi(c), LinForm::new(a, b))
    }

    #[test]
    fn lattice_coords_roundtrip() {
        let es = [LinForm::new(q(1, 2), qi(3)), LinForm::new(qi(1), q(-1, 3)), LinForm::new(qi(0), q(5, 3))];
        let lat = Lattice::spanning(es.iter());
        for e in &es {
            let (a, b) = lat.coords(e);
            assert_eq!(&lat.point(a, b), e);
        }
    }

    #[test]
    fn bivariate_common_factor() {
        // (u + v)(u − 2) / ((u + v)(v + 3)) with u = e^{t}, v = e^{x/2}
        let u = mono(1, qi(1), qi(0));
        let v = mono(1, qi(0), q(1, 2));
        let common = &u + &v;
        let n = &common * &(&u - &ExpPoly::constant(qi(2)));
        let d = &common * &(&v + &ExpPoly::constant(qi(3)));
        let (rn, rd) = reduce(&n, &d);
        assert_eq!(rn.len(), 2);
        assert_eq!(rd.len(), 2);
        assert_eq!(&rn * &d, &n * &rd);
    }

    #[test]
    fn coprime_left_alone() {
        let u = mono(1, qi(1), qi(0));
        let n = &u + &ExpPoly::one();
        let d = &u - &ExpPoly::one();
        let (rn, rd) = reduce(&n, &d);
        assert_eq!((rn, rd), (n, d));
    }
}
