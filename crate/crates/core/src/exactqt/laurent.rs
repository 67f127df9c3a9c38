use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::BigRat;

/// Exponent pair of a monomial `q^(q2/2) t^(t2/2)`, stored doubled.
///
/// Ordered by total degree, then by `q`-degree, which is both the rendering
/// order and the graded-lex order used to pick leading terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Exp {
    pub q2: i64,
    pub t2: i64,
}

impl Exp {
    pub const ZERO: Exp = Exp { q2: 0, t2: 0 };

    pub fn new(q2: i64, t2: i64) -> Self {
        Exp { q2, t2 }
    }

    /// Integer exponents `q^q t^t`.
    pub fn int(q: i64, t: i64) -> Self {
        Exp { q2: 2 * q, t2: 2 * t }
    }

    fn total(&self) -> i64 {
        self.q2 + self.t2
    }
}

impl Ord for Exp {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then(self.q2.cmp(&other.q2))
    }
}

impl PartialOrd for Exp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for Exp {
    type Output = Exp;
    fn add(self, o: Exp) -> Exp {
        Exp::new(self.q2 + o.q2, self.t2 + o.t2)
    }
}

impl Sub for Exp {
    type Output = Exp;
    fn sub(self, o: Exp) -> Exp {
        Exp::new(self.q2 - o.q2, self.t2 - o.t2)
    }
}

/// Laurent polynomial in `q^(1/2)`, `t^(1/2)` with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentQT {
    terms: BTreeMap<Exp, BigRat>,
}

impl LaurentQT {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        Self::monomial(c, Exp::ZERO)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRat::from_integer(BigInt::from(c)))
    }

    pub fn monomial(c: BigRat, e: Exp) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentQT { terms }
    }

    pub fn q() -> Self {
        Self::monomial(BigRat::one(), Exp::int(1, 0))
    }

    pub fn t() -> Self {
        Self::monomial(BigRat::one(), Exp::int(0, 1))
    }

    /// `q^q t^t` with integer exponents.
    pub fn qt_pow(q: i64, t: i64) -> Self {
        Self::monomial(BigRat::one(), Exp::int(q, t))
    }

    /// `1 - q^q t^t`.
    pub fn one_minus(q: i64, t: i64) -> Self {
        let mut f = Self::one();
        f.add_term(Exp::int(q, t), -BigRat::one());
        f
    }

    pub fn from_terms<I: IntoIterator<Item = (Exp, BigRat)>>(it: I) -> Self {
        let mut f = Self::zero();
        for (e, c) in it {
            f.add_term(e, c);
        }
        f
    }

    pub fn add_term(&mut self, e: Exp, c: BigRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Exp::ZERO).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending (total degree, q-degree) order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exp, &BigRat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: Exp) -> BigRat {
        self.terms.get(&e).cloned().unwrap_or_else(BigRat::zero)
    }

    /// Leading term under graded lex.
    pub fn leading(&self) -> Option<(&Exp, &BigRat)> {
        self.terms.iter().next_back()
    }

    pub fn as_monomial(&self) -> Option<(Exp, BigRat)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c.clone()))
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<BigRat> {
        if self.is_zero() {
            return Some(BigRat::zero());
        }
        match self.as_monomial() {
            Some((e, c)) if e == Exp::ZERO => Some(c),
            _ => None,
        }
    }

    /// Componentwise minimum exponent; `None` for zero.
    pub fn min_exp(&self) -> Option<Exp> {
        let q = self.terms.keys().map(|e| e.q2).min()?;
        let t = self.terms.keys().map(|e| e.t2).min()?;
        Some(Exp::new(q, t))
    }

    pub fn has_integer_exponents(&self) -> bool {
        self.terms.keys().all(|e| e.q2 % 2 == 0 && e.t2 % 2 == 0)
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.q2 >= 0 && e.t2 >= 0)
    }

    pub fn has_nonnegative_integer_coeffs(&self) -> bool {
        self.terms
            .values()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    pub fn shift(&self, by: Exp) -> Self {
        LaurentQT {
            terms: self.terms.iter().map(|(e, c)| (*e + by, c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &BigRat) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        LaurentQT {
            terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    /// `f(q^q_exp, t^t_exp)`; a ring homomorphism for any nonzero exponents.
    pub fn substitute(&self, q_exp: i64, t_exp: i64) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(e, c)| (Exp::new(e.q2 * q_exp, e.t2 * t_exp), c.clone())),
        )
    }

    /// Exchange the roles of `q` and `t`.
    pub fn swap_qt(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (Exp::new(e.t2, e.q2), c.clone())))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Evaluate at `q^(1/2) = qh`, `t^(1/2) = th` (both nonzero when negative exponents occur).
    pub fn eval_half(&self, qh: &BigRat, th: &BigRat) -> BigRat {
        let pw = |b: &BigRat, e: i64| -> BigRat {
            if e >= 0 {
                num_traits::pow(b.clone(), e as usize)
            } else {
                num_traits::pow(b.recip(), (-e) as usize)
            }
        };
        self.terms
            .iter()
            .map(|(e, c)| c * pw(qh, e.q2) * pw(th, e.t2))
            .fold(BigRat::zero(), |a, b| a + b)
    }

    /// Collapse `q = t = z` and return the univariate Laurent polynomial in `z^(1/2)`
    /// as (lowest doubled exponent, dense coefficients).
    pub(crate) fn diagonal(&self) -> (i64, Vec<BigRat>) {
        let mut m: BTreeMap<i64, BigRat> = BTreeMap::new();
        for (e, c) in &self.terms {
            *m.entry(e.q2 + e.t2).or_insert_with(BigRat::zero) += c;
        }
        m.retain(|_, c| !c.is_zero());
        let Some(&lo) = m.keys().next() else {
            return (0, Vec::new());
        };
        let hi = *m.keys().next_back().unwrap();
        let mut v = vec![BigRat::zero(); (hi - lo + 1) as usize];
        for (k, c) in m {
            v[(k - lo) as usize] = c;
        }
        (lo, v)
    }
}

impl Add for &LaurentQT {
    type Output = LaurentQT;
    fn add(self, o: &LaurentQT) -> LaurentQT {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentQT {
    type Output = LaurentQT;
    fn sub(self, o: &LaurentQT) -> LaurentQT {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Neg for &LaurentQT {
    type Output = LaurentQT;
    fn neg(self) -> LaurentQT {
        LaurentQT {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Mul for &LaurentQT {
    type Output = LaurentQT;
    fn mul(self, o: &LaurentQT) -> LaurentQT {
        let mut acc: BTreeMap<Exp, BigRat> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                *acc.entry(*ea + *eb).or_insert_with(BigRat::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        LaurentQT { terms: acc }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentQT {
            type Output = LaurentQT;
            fn $m(self, o: LaurentQT) -> LaurentQT {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for LaurentQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::render_laurent(self))
    }
}
