//! Differential operators with coefficients in `F_p[x][1/δ]`, the Calogero-Moser
//! operator, and the radial part of the Dunkl Laplacian.
//!
//! Here `δ = Π_{i<j} (x_i - x_j)`. A coefficient is stored as `num / δ^k`.
//!
//! On symmetric polynomials `Σ_i D_i^2` acts as
//! `H_c = Δ - 2c Σ_{i<j} (∂_i - ∂_j) / (x_i - x_j)`, and the gauge transform
//! `δ^{-c} ∘ H_c ∘ δ^{c}` is the Calogero-Moser operator `L_c` with the same
//! `c`. Since `c(c+1)` is invariant under `c ↦ -1 - c` the potential alone
//! cannot tell the two apart; the gauge exponent fixes `c' = c`, with `c`
//! lifted to `[0, p)`.

use std::collections::BTreeMap;
use std::fmt;

use super::fp::Fp;
use super::poly::{Mono, Poly};

/// `num / δ^k`.
#[derive(Clone, Debug)]
pub struct LocPoly {
    pub num: Poly,
    pub k: u32,
}

pub fn vandermonde(n: usize, field: Fp) -> Poly {
    vandermonde_without(n, field, None)
}

/// `δ / (x_i - x_j)` for `i < j`, or `δ` itself.
fn vandermonde_without(n: usize, field: Fp, skip: Option<(usize, usize)>) -> Poly {
    let mut d = Poly::one(n, field);
    for a in 0..n {
        for b in a + 1..n {
            if skip != Some((a, b)) {
                d = d.mul(&Poly::var(n, field, a).sub(&Poly::var(n, field, b)));
            }
        }
    }
    d
}

impl LocPoly {
    pub fn poly(num: Poly) -> Self {
        LocPoly { num, k: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn delta(&self) -> Poly {
        vandermonde(self.num.n(), self.num.field())
    }

    fn lift(&self, k: u32) -> Poly {
        self.num.mul(&self.delta().pow(k - self.k))
    }

    pub fn add(&self, other: &LocPoly) -> LocPoly {
        let k = self.k.max(other.k);
        LocPoly { num: self.lift(k).add(&other.lift(k)), k }
    }

    pub fn mul(&self, other: &LocPoly) -> LocPoly {
        LocPoly { num: self.num.mul(&other.num), k: self.k + other.k }
    }

    pub fn scale(&self, c: u64) -> LocPoly {
        LocPoly { num: self.num.scale(c), k: self.k }
    }

    /// `∂_i (num / δ^k) = (δ ∂_i num - k num ∂_i δ) / δ^{k+1}`.
    pub fn derivative(&self, i: usize) -> LocPoly {
        if self.k == 0 {
            return LocPoly::poly(self.num.derivative(i));
        }
        let d = self.delta();
        let f = self.num.field();
        let num = d
            .mul(&self.num.derivative(i))
            .sub(&self.num.mul(&d.derivative(i)).scale(f.from_u64(self.k as u64)));
        LocPoly { num, k: self.k + 1 }
    }

    /// Divide out powers of `δ` while the division is exact.
    pub fn simplify(&self) -> LocPoly {
        let mut out = self.clone();
        let d = self.delta();
        if d.degree() == Some(0) {
            return LocPoly { num: out.num, k: 0 };
        }
        while out.k > 0 {
            match exact_div(&out.num, &d) {
                Some(q) => {
                    out.num = q;
                    out.k -= 1;
                }
                None => break,
            }
        }
        out
    }
}

impl PartialEq for LocPoly {
    fn eq(&self, other: &Self) -> bool {
        let k = self.k.max(other.k);
        self.lift(k) == other.lift(k)
    }
}

/// Exact division in `F_p[x]` by lex-leading-term elimination, or `None`.
fn exact_div(f: &Poly, g: &Poly) -> Option<Poly> {
    let (gl, &gc) = g.terms().iter().next_back()?;
    let ginv = g.field().inv(gc)?;
    let mut rem = f.clone();
    let mut q = Poly::zero(f.n(), f.field());
    while let Some((fl, &fc)) = rem.terms().iter().next_back() {
        if !fl.iter().zip(gl).all(|(a, b)| a >= b) {
            return None;
        }
        let m: Mono = fl.iter().zip(gl).map(|(a, b)| a - b).collect();
        let c = f.field().mul(fc, ginv);
        let t = Poly::monomial(f.n(), f.field(), m, c);
        rem = rem.sub(&g.mul(&t));
        q = q.add(&t);
    }
    Some(q)
}

/// `Σ_β a_β(x) ∂^β`.
#[derive(Clone, Debug)]
pub struct DiffOp {
    n: usize,
    field: Fp,
    terms: BTreeMap<Mono, LocPoly>,
}

fn binomial(n: u16, k: u16, f: Fp) -> u64 {
    let mut r = 1u64;
    for i in 0..k {
        r = f.mul(r, f.from_u64((n - i) as u64));
        r = f.mul(r, f.inv(f.from_u64((i + 1) as u64)).expect("order below p"));
    }
    r
}

impl DiffOp {
    pub fn zero(n: usize, field: Fp) -> Self {
        DiffOp { n, field, terms: BTreeMap::new() }
    }

    /// Multiplication by a function.
    pub fn multiplication(g: LocPoly) -> Self {
        let mut op = Self::zero(g.num.n(), g.num.field());
        op.add_term(vec![0; op.n], g);
        op
    }

    /// `coeff · ∂^beta`.
    pub fn term(n: usize, field: Fp, beta: Mono, coeff: LocPoly) -> Self {
        let mut op = Self::zero(n, field);
        op.add_term(beta, coeff);
        op
    }

    pub fn laplacian(n: usize, field: Fp) -> Self {
        let mut op = Self::zero(n, field);
        for j in 0..n {
            let mut beta = vec![0; n];
            beta[j] = 2;
            op.add_term(beta, LocPoly::poly(Poly::one(n, field)));
        }
        op
    }

    pub fn terms(&self) -> &BTreeMap<Mono, LocPoly> {
        &self.terms
    }

    pub fn order(&self) -> usize {
        self.terms.keys().map(|b| b.iter().map(|&e| e as usize).sum()).max().unwrap_or(0)
    }

    fn add_term(&mut self, beta: Mono, c: LocPoly) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&beta) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(beta, sum.simplify());
        }
    }

    pub fn add(&self, other: &DiffOp) -> DiffOp {
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(b.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: u64) -> DiffOp {
        let mut out = DiffOp::zero(self.n, self.field);
        for (b, a) in &self.terms {
            out.add_term(b.clone(), a.scale(c));
        }
        out
    }

    pub fn sub(&self, other: &DiffOp) -> DiffOp {
        self.add(&other.scale(self.field.neg(1)))
    }

    /// `self ∘ other`, by the Leibniz rule.
    pub fn compose(&self, other: &DiffOp) -> DiffOp {
        let f = self.field;
        let mut out = DiffOp::zero(self.n, f);
        for (beta, a) in &self.terms {
            for (gamma, b) in &other.terms {
                for alpha in sub_indices(beta) {
                    let mut coeff = 1;
                    for i in 0..self.n {
                        coeff = f.mul(coeff, binomial(beta[i], alpha[i], f));
                    }
                    let mut db = b.clone();
                    for (i, &e) in alpha.iter().enumerate() {
                        for _ in 0..e {
                            db = db.derivative(i);
                        }
                    }
                    let order: Mono = (0..self.n).map(|i| beta[i] - alpha[i] + gamma[i]).collect();
                    out.add_term(order, a.mul(&db).scale(coeff));
                }
            }
        }
        out
    }

    /// `δ^{-e} ∘ self ∘ δ^{e}`.
    pub fn gauge(&self, e: u32) -> DiffOp {
        let d = vandermonde(self.n, self.field);
        let right = DiffOp::multiplication(LocPoly::poly(d.pow(e)));
        let left = DiffOp::multiplication(LocPoly { num: Poly::one(self.n, self.field), k: e });
        left.compose(&self.compose(&right))
    }

    /// Apply to a polynomial.
    pub fn apply(&self, g: &Poly) -> LocPoly {
        let mut out = LocPoly::poly(Poly::zero(self.n, self.field));
        for (beta, a) in &self.terms {
            let mut h = g.clone();
            for (i, &e) in beta.iter().enumerate() {
                for _ in 0..e {
                    h = h.derivative(i);
                }
            }
            out = out.add(&a.mul(&LocPoly::poly(h)));
        }
        out.simplify()
    }
}

impl PartialEq for DiffOp {
    fn eq(&self, other: &Self) -> bool {
        self.sub(other).terms.is_empty()
    }
}

fn sub_indices(beta: &[u16]) -> Vec<Mono> {
    let mut out = vec![Vec::new()];
    for &b in beta {
        out = out
            .into_iter()
            .flat_map(|prefix: Mono| {
                (0..=b).map(move |a| {
                    let mut v = prefix.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    out
}

/// `L_c = Σ_j ∂_j^2 - Σ_{i≠j} c(c+1) / (x_i - x_j)^2`.
pub fn calogero_moser(n: usize, field: Fp, c: u64) -> DiffOp {
    let coupling = field.mul(c, field.add(c, 1));
    let mut potential = LocPoly::poly(Poly::zero(n, field));
    for i in 0..n {
        for j in i + 1..n {
            let w = vandermonde_without(n, field, Some((i, j)));
            potential = potential.add(&LocPoly { num: w.mul(&w), k: 2 });
        }
    }
    // the ordered sum over i != j counts each unordered pair twice
    let potential = potential.scale(field.mul(2, coupling));
    DiffOp::laplacian(n, field).sub(&DiffOp::multiplication(potential))
}

/// `H_c = Δ - 2c Σ_{i<j} (∂_i - ∂_j) / (x_i - x_j)`, the operator by which
/// `Σ D_i^2` acts on symmetric polynomials.
pub fn radial_part(n: usize, field: Fp, c: u64) -> DiffOp {
    let mut first = DiffOp::zero(n, field);
    for i in 0..n {
        for j in i + 1..n {
            let w = LocPoly { num: vandermonde_without(n, field, Some((i, j))), k: 1 };
            let mut bi = vec![0; n];
            bi[i] = 1;
            let mut bj = vec![0; n];
            bj[j] = 1;
            first = first
                .add(&DiffOp::term(n, field, bi, w.clone()))
                .sub(&DiffOp::term(n, field, bj, w));
        }
    }
    DiffOp::laplacian(n, field).sub(&first.scale(field.mul(2, c)))
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(beta, a)| {
                let d: Vec<String> = beta
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| if e == 1 { format!("d{}", i + 1) } else { format!("d{}^{e}", i + 1) })
                    .collect();
                let coeff = if a.k == 0 { format!("({})", a.num) } else { format!("({})/delta^{}", a.num, a.k) };
                if d.is_empty() {
                    coeff
                } else {
                    format!("{coeff}*{}", d.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c_zero_is_the_laplacian() {
        let f = Fp::new(7).unwrap();
        for n in 1..=3 {
            assert_eq!(calogero_moser(n, f, 0), DiffOp::laplacian(n, f));
            assert_eq!(radial_part(n, f, 0), DiffOp::laplacian(n, f));
        }
    }

    #[test]
    fn two_particles_at_c_one() {
        let f = Fp::new(7).unwrap();
        let op = calogero_moser(2, f, 1);
        // 2 * c(c+1) = 4 in front of 1/(x_1 - x_2)^2, and δ = x_1 - x_2
        let potential = DiffOp::multiplication(LocPoly { num: Poly::constant(2, f, 4), k: 2 });
        assert_eq!(op, DiffOp::laplacian(2, f).sub(&potential));
    }

    #[test]
    fn gauge_identity() {
        for (p, c) in [(7u64, 2u64), (5, 1), (7, 3), (11, 4)] {
            let f = Fp::new(p).unwrap();
            for n in 2..=3 {
                if n == 3 && c > 2 {
                    continue;
                }
                let h = radial_part(n, f, c);
                assert_eq!(h.gauge(c as u32), calogero_moser(n, f, c), "n = {n}, p = {p}, c = {c}");
            }
        }
    }

    #[test]
    fn simplify_divides_out_delta() {
        let f = Fp::new(5).unwrap();
        let d = vandermonde(3, f);
        let x = LocPoly { num: d.mul(&d).mul(&Poly::var(3, f, 0)), k: 3 };
        let s = x.simplify();
        assert_eq!(s.k, 1);
        assert_eq!(s, x);
    }
}
