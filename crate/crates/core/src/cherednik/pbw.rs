//! Words in the generators of `H_c` and their PBW normal forms `x^a · w · y^b`.
//!
//! Normalization is plain rewriting on linear combinations of words. A redex
//! is an adjacent pair out of the order `x < w < y` (or two `x`s, two `y`s out
//! of index order, or two group elements), or an identity group element. The
//! rules are the defining relations read left to right:
//!
//! ```text
//! y_i x_j -> x_j y_i + c s_ij                   (i != j)
//! y_k x_k -> x_k y_k + 1 - c Σ_{i≠k} s_ik
//! w x_i   -> x_{w(i)} w
//! y_j w   -> w y_{w^{-1}(j)}
//! ```

use std::collections::BTreeMap;
use std::fmt;

use super::dunkl::DunklOperator;
use super::fp::Fp;
use super::perm::Perm;
use super::poly::{Mono, Poly};
use crate::error::{Error, Result};

/// A generator of `H_c`. The derived order is the PBW order `x < w < y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    X(u8),
    W(Perm),
    Y(u8),
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::X(i) => write!(f, "x{}", i + 1),
            Gen::Y(i) => write!(f, "y{}", i + 1),
            Gen::W(w) => write!(f, "w{w}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    Leftmost,
    Rightmost,
}

/// `H_c` for `S_n` over `F_p`, with `c` a residue.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CherednikAlgebra {
    pub n: usize,
    pub field: Fp,
    pub c: u64,
}

/// A PBW term `x^a · w · y^b`.
pub type Term = (Mono, Perm, Mono);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CherednikElement {
    pub alg: CherednikAlgebra,
    pub terms: BTreeMap<Term, u64>,
}

type Combo = BTreeMap<Vec<Gen>, u64>;

fn add_into<K: Ord>(f: Fp, map: &mut BTreeMap<K, u64>, k: K, c: u64) {
    if c == 0 {
        return;
    }
    let e = map.entry(k).or_insert(0);
    *e = f.add(*e, c);
}

fn prune<K: Ord>(map: &mut BTreeMap<K, u64>) {
    map.retain(|_, v| *v != 0);
}

impl CherednikAlgebra {
    pub fn new(n: usize, p: u64, c: u64) -> Result<Self> {
        let field = Fp::new(p)?;
        if p <= n as u64 {
            return Err(Error::PrimeTooSmall { p, n });
        }
        if n == 0 {
            return Err(Error::InvalidParameter("n must be positive".into()));
        }
        Ok(CherednikAlgebra { n, field, c: c % p })
    }

    pub fn p(&self) -> u64 {
        self.field.p()
    }

    fn check_index(&self, i: usize) {
        assert!(i < self.n, "generator index {i} out of range for n = {}", self.n);
    }

    pub fn x(&self, i: usize) -> Gen {
        self.check_index(i);
        Gen::X(i as u8)
    }

    pub fn y(&self, i: usize) -> Gen {
        self.check_index(i);
        Gen::Y(i as u8)
    }

    pub fn s(&self, i: usize, j: usize) -> Gen {
        self.check_index(i);
        self.check_index(j);
        Gen::W(Perm::transposition(self.n, i, j))
    }

    pub fn one(&self) -> CherednikElement {
        self.from_term((vec![0; self.n], Perm::identity(self.n), vec![0; self.n]), 1)
    }

    pub fn zero(&self) -> CherednikElement {
        CherednikElement { alg: *self, terms: BTreeMap::new() }
    }

    pub fn from_term(&self, t: Term, c: u64) -> CherednikElement {
        let mut e = self.zero();
        add_into(self.field, &mut e.terms, t, c % self.p());
        prune(&mut e.terms);
        e
    }

    pub fn generator(&self, g: &Gen) -> CherednikElement {
        self.normalize(std::slice::from_ref(g))
    }

    /// The symmetrizer `e = (1/n!) Σ_w w`.
    pub fn symmetrizer(&self) -> CherednikElement {
        let f = self.field;
        let inv = f.inv(f.factorial(self.n as u64)).expect("p > n");
        let mut e = self.zero();
        for w in Perm::all(self.n) {
            add_into(f, &mut e.terms, (vec![0; self.n], w, vec![0; self.n]), inv);
        }
        e
    }

    pub fn normalize(&self, word: &[Gen]) -> CherednikElement {
        self.normalize_with(word, Strategy::Leftmost)
    }

    pub fn normalize_with(&self, word: &[Gen], strategy: Strategy) -> CherednikElement {
        let mut pending = Combo::new();
        pending.insert(word.to_vec(), 1);
        self.normalize_combo(pending, strategy)
    }

    fn normalize_combo(&self, mut pending: Combo, strategy: Strategy) -> CherednikElement {
        let f = self.field;
        let mut out = self.zero();
        while let Some((word, c)) = pending.pop_first() {
            if c == 0 {
                continue;
            }
            let found = match strategy {
                Strategy::Leftmost => (0..word.len()).find(|&k| redex_len(&word, k).is_some()),
                Strategy::Rightmost => (0..word.len()).rev().find(|&k| redex_len(&word, k).is_some()),
            };
            let Some(k) = found else {
                add_into(f, &mut out.terms, self.word_to_term(&word), c);
                continue;
            };
            let len = redex_len(&word, k).expect("redex found");
            for (mid, coeff) in self.rewrite(&word[k..k + len]) {
                let mut w = word[..k].to_vec();
                w.extend(mid);
                w.extend_from_slice(&word[k + len..]);
                add_into(f, &mut pending, w, f.mul(c, coeff));
            }
        }
        prune(&mut out.terms);
        out
    }

    fn rewrite(&self, seg: &[Gen]) -> Vec<(Vec<Gen>, u64)> {
        let f = self.field;
        let n = self.n;
        if let [Gen::W(_)] = seg {
            return vec![(vec![], 1)];
        }
        let (a, b) = (&seg[0], &seg[1]);
        match (a, b) {
            (Gen::X(_), Gen::X(_)) | (Gen::Y(_), Gen::Y(_)) => vec![(vec![b.clone(), a.clone()], 1)],
            (Gen::W(u), Gen::W(v)) => {
                let uv = u.compose(v);
                let mid = if uv.is_identity() { vec![] } else { vec![Gen::W(uv)] };
                vec![(mid, 1)]
            }
            (Gen::W(w), Gen::X(i)) => vec![(vec![Gen::X(w.apply(*i as usize) as u8), a.clone()], 1)],
            (Gen::Y(j), Gen::W(w)) => {
                vec![(vec![b.clone(), Gen::Y(w.inverse().apply(*j as usize) as u8)], 1)]
            }
            (Gen::Y(i), Gen::X(j)) => {
                let mut out = vec![(vec![b.clone(), a.clone()], 1)];
                let (i, j) = (*i as usize, *j as usize);
                if i != j {
                    out.push((vec![Gen::W(Perm::transposition(n, i, j))], self.c));
                } else {
                    out.push((vec![], 1));
                    for k in (0..n).filter(|&k| k != i) {
                        out.push((vec![Gen::W(Perm::transposition(n, i, k))], f.neg(self.c)));
                    }
                }
                out.retain(|(_, c)| *c != 0);
                out
            }
            _ => unreachable!("not a redex"),
        }
    }

    fn word_to_term(&self, word: &[Gen]) -> Term {
        let mut a = vec![0u16; self.n];
        let mut b = vec![0u16; self.n];
        let mut w = Perm::identity(self.n);
        for g in word {
            match g {
                Gen::X(i) => a[*i as usize] += 1,
                Gen::Y(i) => b[*i as usize] += 1,
                Gen::W(u) => w = u.clone(),
            }
        }
        (a, w, b)
    }

    pub fn term_to_word(&self, t: &Term) -> Vec<Gen> {
        let (a, w, b) = t;
        let mut word = Vec::new();
        for (i, &e) in a.iter().enumerate() {
            word.extend(std::iter::repeat_n(Gen::X(i as u8), e as usize));
        }
        if !w.is_identity() {
            word.push(Gen::W(w.clone()));
        }
        for (i, &e) in b.iter().enumerate() {
            word.extend(std::iter::repeat_n(Gen::Y(i as u8), e as usize));
        }
        word
    }

    pub fn mul(&self, u: &CherednikElement, v: &CherednikElement) -> CherednikElement {
        let f = self.field;
        let mut pending = Combo::new();
        for (s, &cs) in &u.terms {
            for (t, &ct) in &v.terms {
                let mut w = self.term_to_word(s);
                w.extend(self.term_to_word(t));
                add_into(f, &mut pending, w, f.mul(cs, ct));
            }
        }
        self.normalize_combo(pending, Strategy::Leftmost)
    }

    /// `e · u · e` in normal form.
    pub fn spherical_project(&self, u: &CherednikElement) -> CherednikElement {
        let e = self.symmetrizer();
        self.mul(&self.mul(&e, u), &e)
    }

    /// The anti-involution `x_i ↔ y_i`, `w ↦ w^{-1}`. On a PBW term it is
    /// `x^a w y^b ↦ x^b w^{-1} y^a`, again in normal order.
    pub fn anti_involution(&self, u: &CherednikElement) -> CherednikElement {
        let mut out = self.zero();
        for ((a, w, b), &c) in &u.terms {
            add_into(self.field, &mut out.terms, (b.clone(), w.inverse(), a.clone()), c);
        }
        out
    }

    /// The anti-involution applied letter by letter to a word.
    pub fn anti_involution_word(word: &[Gen]) -> Vec<Gen> {
        word.iter()
            .rev()
            .map(|g| match g {
                Gen::X(i) => Gen::Y(*i),
                Gen::Y(i) => Gen::X(*i),
                Gen::W(w) => Gen::W(w.inverse()),
            })
            .collect()
    }

    /// Action on the polynomial representation: `x^a w y^b` acts as
    /// `f ↦ x^a · w(D^b f)`.
    pub fn act_on_poly(&self, u: &CherednikElement, g: &Poly) -> Poly {
        let mut out = Poly::zero(self.n, self.field);
        let ds: Vec<DunklOperator> = (0..self.n).map(|i| DunklOperator::new(self.n, self.field, self.c, i)).collect();
        for ((a, w, b), &c) in &u.terms {
            let mut h = g.clone();
            for (i, &e) in b.iter().enumerate() {
                h = ds[i].apply_power(&h, e as u64);
            }
            out = out.add(&h.permute(w).mul_mono(a).scale(c));
        }
        out
    }
}

/// Length of the redex starting at `k`, if any.
fn redex_len(word: &[Gen], k: usize) -> Option<usize> {
    if let Gen::W(w) = &word[k] {
        if w.is_identity() {
            return Some(1);
        }
    }
    let next = word.get(k + 1)?;
    let pair = match (&word[k], next) {
        (Gen::X(i), Gen::X(j)) | (Gen::Y(i), Gen::Y(j)) => i > j,
        (Gen::W(_), Gen::W(_)) | (Gen::W(_), Gen::X(_)) | (Gen::Y(_), Gen::W(_)) | (Gen::Y(_), Gen::X(_)) => true,
        _ => false,
    };
    pair.then_some(2)
}

impl CherednikElement {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, t: &Term) -> u64 {
        self.terms.get(t).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &CherednikElement) -> CherednikElement {
        let mut out = self.clone();
        for (t, &c) in &other.terms {
            add_into(self.alg.field, &mut out.terms, t.clone(), c);
        }
        prune(&mut out.terms);
        out
    }

    pub fn scale(&self, c: u64) -> CherednikElement {
        let f = self.alg.field;
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = f.mul(*v, c % f.p());
        }
        prune(&mut out.terms);
        out
    }
}

impl fmt::Display for CherednikElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(t, &c)| {
                let word: Vec<String> = self.alg.term_to_word(t).iter().map(Gen::to_string).collect();
                match (c, word.is_empty()) {
                    (_, true) => c.to_string(),
                    (1, false) => word.join("*"),
                    _ => format!("{c}*{}", word.join("*")),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(c: u64) -> CherednikAlgebra {
        CherednikAlgebra::new(2, 5, c).unwrap()
    }

    fn term(a: [u16; 2], w: Perm, b: [u16; 2]) -> Term {
        (a.to_vec(), w, b.to_vec())
    }

    #[test]
    fn defining_relation_examples() {
        let h = alg(2);
        let id = Perm::identity(2);
        let s = Perm::transposition(2, 0, 1);
        let yx = h.normalize(&[h.y(0), h.x(0)]);
        let mut expect = h.from_term(term([1, 0], id.clone(), [1, 0]), 1);
        expect = expect.add(&h.one());
        expect = expect.add(&h.from_term(term([0, 0], s.clone(), [0, 0]), h.field.neg(2)));
        assert_eq!(yx, expect);

        let yx2 = h.normalize(&[h.y(0), h.x(1)]);
        let expect2 = h
            .from_term(term([0, 1], id.clone(), [1, 0]), 1)
            .add(&h.from_term(term([0, 0], s.clone(), [0, 0]), 2));
        assert_eq!(yx2, expect2);

        assert_eq!(h.normalize(&[h.s(0, 1), h.x(0)]), h.from_term(term([0, 1], s, [0, 0]), 1));
    }

    #[test]
    fn symmetrizer_is_idempotent() {
        let h = CherednikAlgebra::new(3, 5, 1).unwrap();
        let e = h.symmetrizer();
        assert_eq!(h.mul(&e, &e), e);
        assert_eq!(h.spherical_project(&h.one()), e);
    }

    #[test]
    fn rejects_small_prime() {
        assert_eq!(CherednikAlgebra::new(3, 3, 0), Err(Error::PrimeTooSmall { p: 3, n: 3 }));
        assert_eq!(CherednikAlgebra::new(2, 4, 0), Err(Error::NotPrime(4)));
    }
}
