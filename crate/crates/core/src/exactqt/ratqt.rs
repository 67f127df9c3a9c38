use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::gcd::{bdiv_exact, bgcd, btrim, BPoly};
use super::laurent::{Exp, LaurentQT};
use super::BigRat;
use crate::error::{Error, Result};

/// Normalized element of `Q(q^(1/2), t^(1/2))`.
///
/// Canonical form: `den` is a polynomial divisible by neither `q` nor `t`,
/// coprime to `num`, with leading graded-lex coefficient 1. Any monomial
/// factor lives in `num`. Two values are equal iff their fields are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatQT {
    num: LaurentQT,
    den: LaurentQT,
}

/// Value of a function on the diagonal `q = t = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Limit {
    Value(BigRat),
    Pole,
}

impl fmt::Display for Limit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Limit::Value(v) => write!(f, "{v}"),
            Limit::Pole => f.write_str("pole"),
        }
    }
}

// ------------------------------------------------------------- polynomial kernels

fn exp_gcd(a: &LaurentQT, b: &LaurentQT) -> (i64, i64) {
    let mut gq = 0i64;
    let mut gt = 0i64;
    for (e, _) in a.terms().chain(b.terms()) {
        gq = gq.gcd(&e.q2);
        gt = gt.gcd(&e.t2);
    }
    (gq.max(1), gt.max(1))
}

/// `f = scale * P(q^(gq/2), t^(gt/2))` with `P` primitive over `Z`; `f` must be a polynomial.
fn to_bpoly(f: &LaurentQT, gq: i64, gt: i64) -> (BPoly, BigRat) {
    let lcm = f
        .terms()
        .fold(BigInt::one(), |l, (_, c)| l.lcm(c.denom()));
    let mut ints: Vec<(usize, usize, BigInt)> = Vec::with_capacity(f.len());
    let mut content = BigInt::zero();
    for (e, c) in f.terms() {
        let v = (c * BigRat::from_integer(lcm.clone())).to_integer();
        content = content.gcd(&v);
        ints.push(((e.q2 / gq) as usize, (e.t2 / gt) as usize, v));
    }
    let dy = ints.iter().map(|x| x.1).max().unwrap_or(0);
    let mut out: BPoly = vec![Vec::new(); dy + 1];
    for (i, j, v) in ints {
        let row = &mut out[j];
        if row.len() <= i {
            row.resize(i + 1, BigInt::zero());
        }
        row[i] = v / &content;
    }
    btrim(&mut out);
    (out, BigRat::new(content, lcm))
}

fn from_bpoly(p: &BPoly, gq: i64, gt: i64) -> LaurentQT {
    let mut out = LaurentQT::zero();
    for (j, row) in p.iter().enumerate() {
        for (i, c) in row.iter().enumerate() {
            if !c.is_zero() {
                out.add_term(
                    Exp::new(i as i64 * gq, j as i64 * gt),
                    BigRat::from_integer(c.clone()),
                );
            }
        }
    }
    out
}

fn is_unit(p: &BPoly) -> bool {
    p.len() == 1 && p[0].len() == 1 && p[0][0].is_one()
}

/// Divide out the common polynomial factor of `a` and `b` (both polynomials with
/// zero minimal exponents). Returns the cofactors, up to rational scaling of each.
fn cancel_common(a: &LaurentQT, b: &LaurentQT) -> (LaurentQT, LaurentQT) {
    if a.as_constant().is_some() || b.as_constant().is_some() {
        return (a.clone(), b.clone());
    }
    let (gq, gt) = exp_gcd(a, b);
    let (pa, sa) = to_bpoly(a, gq, gt);
    let (pb, sb) = to_bpoly(b, gq, gt);
    let g = bgcd(&pa, &pb);
    if is_unit(&g) {
        return (a.clone(), b.clone());
    }
    let qa = bdiv_exact(&pa, &g).expect("gcd divides");
    let qb = bdiv_exact(&pb, &g).expect("gcd divides");
    (
        from_bpoly(&qa, gq, gt).scale(&sa),
        from_bpoly(&qb, gq, gt).scale(&sb),
    )
}

/// Common polynomial factor of two polynomials with zero minimal exponents.
fn common_factor(a: &LaurentQT, b: &LaurentQT) -> Option<LaurentQT> {
    if a.as_constant().is_some() || b.as_constant().is_some() {
        return None;
    }
    let (gq, gt) = exp_gcd(a, b);
    let (pa, _) = to_bpoly(a, gq, gt);
    let (pb, _) = to_bpoly(b, gq, gt);
    let g = bgcd(&pa, &pb);
    if is_unit(&g) {
        None
    } else {
        Some(from_bpoly(&g, gq, gt))
    }
}

/// Exact quotient `a / b` of polynomials known to divide.
fn div_exact(a: &LaurentQT, b: &LaurentQT) -> LaurentQT {
    if let Some(c) = b.as_constant() {
        return a.scale(&c.recip());
    }
    let (gq, gt) = exp_gcd(a, b);
    let (pa, sa) = to_bpoly(a, gq, gt);
    let (pb, sb) = to_bpoly(b, gq, gt);
    let q = bdiv_exact(&pa, &pb).expect("exact polynomial division");
    from_bpoly(&q, gq, gt).scale(&(sa / sb))
}

fn strip_monomial(f: &LaurentQT) -> (LaurentQT, Exp) {
    match f.min_exp() {
        Some(m) if m != Exp::ZERO => (f.shift(Exp::ZERO - m), m),
        Some(m) => (f.clone(), m),
        None => (f.clone(), Exp::ZERO),
    }
}

impl RatQT {
    pub fn zero() -> Self {
        RatQT {
            num: LaurentQT::zero(),
            den: LaurentQT::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentQT::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_laurent(LaurentQT::from_int(c))
    }

    pub fn from_rat(c: BigRat) -> Self {
        Self::from_laurent(LaurentQT::constant(c))
    }

    pub fn from_laurent(num: LaurentQT) -> Self {
        RatQT {
            num,
            den: LaurentQT::one(),
        }
    }

    /// `q^q t^t`.
    pub fn monomial(q: i64, t: i64) -> Self {
        Self::from_laurent(LaurentQT::qt_pow(q, t))
    }

    /// `(q t)^(k/2)`.
    pub fn qt_half_power(k: i64) -> Self {
        Self::from_laurent(LaurentQT::monomial(BigRat::one(), Exp::new(k, k)))
    }

    pub fn q() -> Self {
        Self::from_laurent(LaurentQT::q())
    }

    pub fn t() -> Self {
        Self::from_laurent(LaurentQT::t())
    }

    /// `1 - q^q t^t`.
    pub fn one_minus(q: i64, t: i64) -> Self {
        Self::from_laurent(LaurentQT::one_minus(q, t))
    }

    /// Build `num / den`, normalizing.
    pub fn new(num: LaurentQT, den: LaurentQT) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (n0, mn) = strip_monomial(&num);
        let (d0, md) = strip_monomial(&den);
        let (n1, d1) = cancel_common(&n0, &d0);
        Ok(Self::assemble(n1, d1, mn - md))
    }

    /// Finish the canonical form for a pair already known to be coprime.
    fn from_coprime(num: LaurentQT, den: LaurentQT) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (n0, mn) = strip_monomial(&num);
        let (d0, md) = strip_monomial(&den);
        Self::assemble(n0, d0, mn - md)
    }

    fn assemble(num: LaurentQT, den: LaurentQT, mono: Exp) -> Self {
        let lc = den.leading().map(|(_, c)| c.clone()).expect("nonzero denominator");
        let inv = lc.recip();
        let num = if mono == Exp::ZERO { num } else { num.shift(mono) };
        if inv.is_one() {
            RatQT { num, den }
        } else {
            RatQT {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn num(&self) -> &LaurentQT {
        &self.num
    }

    pub fn den(&self) -> &LaurentQT {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// True when the value is a Laurent polynomial (denominator 1).
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_laurent(&self) -> Option<&LaurentQT> {
        self.is_laurent().then_some(&self.num)
    }

    pub fn has_integer_exponents(&self) -> bool {
        self.num.has_integer_exponents() && self.den.has_integer_exponents()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, o: &RatQT) -> Result<Self> {
        Ok(self * &o.inv()?)
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatQT {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let k = k.unsigned_abs() as u32;
        RatQT {
            num: base.num.pow(k),
            den: base.den.pow(k),
        }
    }

    /// `f(q^q_exp, t^t_exp)`.
    pub fn substitute(&self, q_exp: i64, t_exp: i64) -> Self {
        assert!(q_exp != 0 && t_exp != 0, "substitution exponents must be nonzero");
        if self.is_zero() {
            return Self::zero();
        }
        Self::from_coprime(
            self.num.substitute(q_exp, t_exp),
            self.den.substitute(q_exp, t_exp),
        )
    }

    /// The involution `q -> 1/q`, `t -> 1/t`.
    pub fn top(&self) -> Self {
        self.substitute(-1, -1)
    }

    pub fn swap_qt(&self) -> Self {
        Self::from_coprime(self.num.swap_qt(), self.den.swap_qt())
    }

    /// Set `q = t = z`, cancel powers of `(1 - z)` and evaluate at `z = 1`.
    pub fn limit_at_one(&self) -> Limit {
        if self.is_zero() {
            return Limit::Value(BigRat::zero());
        }
        let (_, n) = self.num.diagonal();
        let (_, d) = self.den.diagonal();
        if d.is_empty() {
            return Limit::Pole;
        }
        if n.is_empty() {
            return Limit::Value(BigRat::zero());
        }
        let (mn, nv) = root_multiplicity_at_one(n);
        let (md, dv) = root_multiplicity_at_one(d);
        match mn.cmp(&md) {
            std::cmp::Ordering::Less => Limit::Pole,
            std::cmp::Ordering::Greater => Limit::Value(BigRat::zero()),
            std::cmp::Ordering::Equal => Limit::Value(nv / dv),
        }
    }

    /// Evaluate at `q^(1/2) = qh`, `t^(1/2) = th`; `None` at a pole.
    pub fn eval_half(&self, qh: &BigRat, th: &BigRat) -> Option<BigRat> {
        let d = self.den.eval_half(qh, th);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval_half(qh, th) / d)
    }

    /// Power-series coefficients `q^a t^b` with `a + b <= max_total`, when the value
    /// is a power series in `q, t` with integer exponents.
    pub fn series(&self, max_total: i64) -> Option<BTreeMap<(i64, i64), BigRat>> {
        if !self.has_integer_exponents() || !self.num.is_polynomial() {
            return None;
        }
        let d0 = self.den.coeff(Exp::ZERO);
        if d0.is_zero() {
            return None;
        }
        let lim = 2 * max_total;
        // Truncated inverse of the denominator, graded by total degree.
        let mut inv: BTreeMap<Exp, BigRat> = BTreeMap::new();
        let d0inv = d0.recip();
        let rest: Vec<(Exp, BigRat)> = self
            .den
            .terms()
            .filter(|(e, _)| **e != Exp::ZERO)
            .map(|(e, c)| (*e, c.clone()))
            .collect();
        let mut by_degree: BTreeMap<i64, Vec<Exp>> = BTreeMap::new();
        for tot in (0..=lim).step_by(2) {
            for q2 in (0..=tot).step_by(2) {
                by_degree.entry(tot).or_default().push(Exp::new(q2, tot - q2));
            }
        }
        for exps in by_degree.values() {
            for &e in exps {
                let mut acc = if e == Exp::ZERO { BigRat::one() } else { BigRat::zero() };
                for (re, rc) in &rest {
                    let prev = e - *re;
                    if prev.q2 < 0 || prev.t2 < 0 {
                        continue;
                    }
                    if let Some(v) = inv.get(&prev) {
                        acc -= rc * v;
                    }
                }
                let v = acc * &d0inv;
                if !v.is_zero() {
                    inv.insert(e, v);
                }
            }
        }
        let mut out: BTreeMap<(i64, i64), BigRat> = BTreeMap::new();
        for (ne, nc) in self.num.terms() {
            for (ie, ic) in &inv {
                let e = *ne + *ie;
                if e.q2 + e.t2 <= lim {
                    *out.entry((e.q2 / 2, e.t2 / 2)).or_insert_with(BigRat::zero) += nc * ic;
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        Some(out)
    }
}

/// Multiplicity of the root 1 and the value of the cofactor there.
fn root_multiplicity_at_one(mut v: Vec<BigRat>) -> (usize, BigRat) {
    let mut m = 0;
    loop {
        let val = v.iter().fold(BigRat::zero(), |a, c| a + c);
        if !val.is_zero() {
            return (m, val);
        }
        // synthetic division by (w - 1)
        let n = v.len();
        let mut quo = vec![BigRat::zero(); n - 1];
        let mut carry = BigRat::zero();
        for i in (1..n).rev() {
            carry += &v[i];
            quo[i - 1] = carry.clone();
        }
        v = quo;
        m += 1;
    }
}

impl Add for &RatQT {
    type Output = RatQT;
    fn add(self, o: &RatQT) -> RatQT {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatQT::from_laurent(&self.num + &o.num);
        }
        if self.den == o.den {
            return RatQT::new(&self.num + &o.num, self.den.clone()).unwrap();
        }
        match common_factor(&self.den, &o.den) {
            None => {
                let num = &(&self.num * &o.den) + &(&o.num * &self.den);
                let den = &self.den * &o.den;
                // Both denominators are coprime to their numerators and to each
                // other, so the sum is already reduced.
                RatQT::from_coprime(num, den)
            }
            Some(g) => {
                let a = div_exact(&self.den, &g);
                let b = div_exact(&o.den, &g);
                let num = &(&self.num * &b) + &(&o.num * &a);
                let den = &self.den * &b;
                RatQT::new(num, den).unwrap()
            }
        }
    }
}

impl Neg for &RatQT {
    type Output = RatQT;
    fn neg(self) -> RatQT {
        RatQT {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Sub for &RatQT {
    type Output = RatQT;
    fn sub(self, o: &RatQT) -> RatQT {
        self + &(-o)
    }
}

impl Mul for &RatQT {
    type Output = RatQT;
    fn mul(self, o: &RatQT) -> RatQT {
        if self.is_zero() || o.is_zero() {
            return RatQT::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatQT::from_laurent(&self.num * &o.num);
        }
        let (a, ma) = strip_monomial(&self.num);
        let (b, mb) = strip_monomial(&o.num);
        let (a, od) = cancel_common(&a, &o.den);
        let (b, sd) = cancel_common(&b, &self.den);
        RatQT::assemble(&a * &b, &sd * &od, ma + mb)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatQT {
            type Output = RatQT;
            fn $m(self, o: RatQT) -> RatQT {
                (&self).$m(&o)
            }
        }
        impl $tr<&RatQT> for RatQT {
            type Output = RatQT;
            fn $m(self, o: &RatQT) -> RatQT {
                (&self).$m(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RatQT {
    type Output = RatQT;
    fn neg(self) -> RatQT {
        -&self
    }
}

impl std::iter::Sum for RatQT {
    fn sum<I: Iterator<Item = RatQT>>(iter: I) -> RatQT {
        iter.fold(RatQT::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for RatQT {
    fn product<I: Iterator<Item = RatQT>>(iter: I) -> RatQT {
        iter.fold(RatQT::one(), |a, b| &a * &b)
    }
}

impl From<LaurentQT> for RatQT {
    fn from(f: LaurentQT) -> Self {
        RatQT::from_laurent(f)
    }
}

impl fmt::Display for RatQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::render_ratqt(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64, i64)]) -> LaurentQT {
        LaurentQT::from_terms(
            terms
                .iter()
                .map(|&(q, t, c)| (Exp::int(q, t), BigRat::from_integer(c.into()))),
        )
    }

    #[test]
    fn product_of_conjugates() {
        let a = RatQT::one_minus(1, 0);
        let b = RatQT::from_laurent(lp(&[(0, 0, 1), (1, 0, 1)]));
        assert_eq!(&a * &b, RatQT::one_minus(2, 0));
    }

    #[test]
    fn cancellation() {
        let f = RatQT::new(LaurentQT::one_minus(2, 0), LaurentQT::one_minus(1, 0)).unwrap();
        assert_eq!(f, RatQT::from_laurent(lp(&[(0, 0, 1), (1, 0, 1)])));
        assert!(f.is_laurent());
    }

    #[test]
    fn half_lattice() {
        let h = RatQT::qt_half_power(1);
        assert_eq!(&h * &h, RatQT::monomial(1, 1));
        assert!(!h.has_integer_exponents());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(RatQT::one().checked_div(&RatQT::zero()), Err(Error::DivisionByZero));
        assert_eq!(
            RatQT::new(LaurentQT::one(), LaurentQT::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn substitution_and_involution() {
        let f = &RatQT::one_minus(1, 0) * &RatQT::one_minus(0, 1);
        let g = f.substitute(5, 5);
        assert_eq!(g, &RatQT::one_minus(5, 0) * &RatQT::one_minus(0, 5));
        let s = &RatQT::q() + &RatQT::t();
        assert_eq!(s.top(), &RatQT::monomial(-1, 0) + &RatQT::monomial(0, -1));
        let r = RatQT::new(lp(&[(0, 0, 1), (3, 1, -2)]), lp(&[(0, 0, 1), (1, 2, 1), (2, 0, 3)]))
            .unwrap();
        assert_eq!(r.top().top(), r);
    }

    #[test]
    fn limits() {
        let f = RatQT::new(LaurentQT::one_minus(2, 0), LaurentQT::one_minus(1, 0)).unwrap();
        assert_eq!(f.limit_at_one(), Limit::Value(BigRat::from_integer(2.into())));
        let p = 5;
        let g = RatQT::new(
            &LaurentQT::one_minus(p, 0) * &LaurentQT::one_minus(0, p),
            &LaurentQT::one_minus(1, 0) * &LaurentQT::one_minus(0, 1),
        )
        .unwrap();
        assert_eq!(g.limit_at_one(), Limit::Value(BigRat::from_integer(25.into())));
        let h = RatQT::one_minus(1, 0).inv().unwrap();
        assert_eq!(h.limit_at_one(), Limit::Pole);
    }

    #[test]
    fn series_of_geometric() {
        let g = &RatQT::one_minus(1, 0).inv().unwrap() * &RatQT::one_minus(0, 1).inv().unwrap();
        let s = g.series(4).unwrap();
        assert_eq!(s.len(), 15);
        assert!(s.values().all(|c| c.is_one()));
    }
}
