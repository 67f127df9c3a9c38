//! Polynomials in `x_1, .., x_n` over `F_p`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use super::fp::Fp;
use super::perm::Perm;

pub type Mono = Vec<u16>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    n: usize,
    field: Fp,
    terms: BTreeMap<Mono, u64>,
}

impl Poly {
    pub fn zero(n: usize, field: Fp) -> Self {
        Poly { n, field, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, field: Fp, c: u64) -> Self {
        Self::monomial(n, field, vec![0; n], c)
    }

    pub fn one(n: usize, field: Fp) -> Self {
        Self::constant(n, field, 1)
    }

    pub fn monomial(n: usize, field: Fp, exps: Mono, c: u64) -> Self {
        assert_eq!(exps.len(), n);
        let mut f = Self::zero(n, field);
        f.add_term(exps, c);
        f
    }

    pub fn var(n: usize, field: Fp, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Self::monomial(n, field, e, 1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn terms(&self) -> &BTreeMap<Mono, u64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &[u16]) -> u64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| total_degree(m)).max()
    }

    pub fn add_term(&mut self, m: Mono, c: u64) {
        let c = c % self.field.p();
        if c == 0 {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = self.field.add(*o.get(), c);
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(self.field.neg(1)))
    }

    pub fn scale(&self, c: u64) -> Poly {
        let c = c % self.field.p();
        let mut out = Self::zero(self.n, self.field);
        if c != 0 {
            out.terms = self.terms.iter().map(|(m, &v)| (m.clone(), self.field.mul(v, c))).collect();
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Self::zero(self.n, self.field);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                let m = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(m, self.field.mul(ca, cb));
            }
        }
        out
    }

    pub fn mul_mono(&self, m: &[u16]) -> Poly {
        let mut out = Self::zero(self.n, self.field);
        out.terms = self
            .terms
            .iter()
            .map(|(a, &c)| (a.iter().zip(m).map(|(x, y)| x + y).collect(), c))
            .collect();
        out
    }

    pub fn mul_var(&self, i: usize) -> Poly {
        let mut e = vec![0; self.n];
        e[i] = 1;
        self.mul_mono(&e)
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Self::one(self.n, self.field), |acc, _| acc.mul(self))
    }

    /// `∂f/∂x_i`.
    pub fn derivative(&self, i: usize) -> Poly {
        let mut out = Self::zero(self.n, self.field);
        for (m, &c) in &self.terms {
            if m[i] > 0 {
                let mut e = m.clone();
                e[i] -= 1;
                out.add_term(e, self.field.mul(c, self.field.from_u64(m[i] as u64)));
            }
        }
        out
    }

    /// `(w f)(x) = f(w^{-1} x)`, i.e. `x_i ↦ x_{w(i)}`.
    pub fn permute(&self, w: &Perm) -> Poly {
        let mut out = Self::zero(self.n, self.field);
        for (m, &c) in &self.terms {
            let mut e = vec![0; self.n];
            for (i, &a) in m.iter().enumerate() {
                e[w.apply(i)] = a;
            }
            out.add_term(e, c);
        }
        out
    }

    pub fn swap(&self, i: usize, j: usize) -> Poly {
        self.permute(&Perm::transposition(self.n, i, j))
    }

    /// The divided difference `(f - s_ij f) / (x_i - x_j)`.
    ///
    /// Each monomial `x_i^a x_j^b m` contributes
    /// `x_i^k x_j^k m (x_i^d - x_j^d) / (x_i - x_j)` with `k = min(a, b)` and
    /// `d = a - b`, which is a geometric sum, so no division is performed.
    pub fn divided_difference(&self, i: usize, j: usize) -> Poly {
        let mut out = Self::zero(self.n, self.field);
        for (m, &c) in &self.terms {
            let (a, b) = (m[i], m[j]);
            if a == b {
                continue;
            }
            let (hi, lo, sign) = if a > b { (a, b, c) } else { (b, a, self.field.neg(c)) };
            let d = hi - lo;
            for k in 0..d {
                let mut e = m.clone();
                e[i] = lo + k;
                e[j] = lo + d - 1 - k;
                out.add_term(e, sign);
            }
        }
        out
    }

    /// The `k`-th elementary symmetric polynomial in `x_1^r, .., x_n^r`.
    pub fn elementary_in_powers(n: usize, field: Fp, k: usize, r: u16) -> Poly {
        let mut out = Self::zero(n, field);
        for subset in 0u32..(1 << n) {
            if subset.count_ones() as usize == k {
                let e = (0..n).map(|i| if subset >> i & 1 == 1 { r } else { 0 }).collect();
                out.add_term(e, 1);
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n.saturating_sub(1)).all(|k| self.swap(k, k + 1) == *self)
    }
}

pub fn total_degree(m: &[u16]) -> usize {
    m.iter().map(|&e| e as usize).sum()
}

/// All exponent vectors of total degree exactly `d` in `n` variables, in
/// lexicographic order.
pub fn monomials_of_degree(n: usize, d: usize) -> Vec<Mono> {
    fn go(n: usize, d: usize, cur: &mut Mono, out: &mut Vec<Mono>) {
        if cur.len() + 1 == n {
            cur.push(d as u16);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for a in (0..=d).rev() {
            cur.push(a as u16);
            go(n, d - a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(n, d, &mut Vec::new(), &mut out);
    out
}

pub fn monomials_up_to(n: usize, d: usize) -> Vec<Mono> {
    (0..=d).flat_map(|k| monomials_of_degree(n, k)).collect()
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, &c)| {
                let vars: Vec<String> = m
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{e}", i + 1) })
                    .collect();
                match (c, vars.is_empty()) {
                    (_, true) => c.to_string(),
                    (1, false) => vars.join("*"),
                    _ => format!("{c}*{}", vars.join("*")),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> Fp {
        Fp::new(5).unwrap()
    }

    #[test]
    fn divided_difference_times_linear_form_recovers_antisymmetrization() {
        let f = f5();
        let n = 3;
        for m in monomials_up_to(n, 6) {
            let g = Poly::monomial(n, f, m, 1);
            let dd = g.divided_difference(0, 2);
            let lin = Poly::var(n, f, 0).sub(&Poly::var(n, f, 2));
            assert_eq!(dd.mul(&lin), g.sub(&g.swap(0, 2)));
        }
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_up_to(2, 3).len(), 10);
        assert_eq!(monomials_of_degree(1, 4), vec![vec![4]]);
    }

    #[test]
    fn derivative_of_pth_power_vanishes() {
        let x = Poly::var(2, f5(), 0);
        assert!(x.pow(5).derivative(0).is_zero());
        assert_eq!(x.pow(3).derivative(0), x.pow(2).scale(3));
    }

    #[test]
    fn elementary_in_powers_is_symmetric() {
        let e2 = Poly::elementary_in_powers(3, f5(), 2, 5);
        assert!(e2.is_symmetric());
        assert_eq!(e2.terms().len(), 3);
    }
}
