//! Gröbner bases over `F_p` by Buchberger's algorithm.
//!
//! Terms are stored under an order key whose natural `Ord` is the chosen
//! monomial order, so the leading term is the last map entry.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::fp::Fp;
use super::poly::{Mono, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Lex,
}

impl MonomialOrder {
    fn key(self, m: &[u16]) -> Vec<i32> {
        match self {
            MonomialOrder::Lex => m.iter().map(|&e| e as i32).collect(),
            MonomialOrder::Grevlex => {
                let deg: i32 = m.iter().map(|&e| e as i32).sum();
                std::iter::once(deg).chain(m.iter().rev().map(|&e| -(e as i32))).collect()
            }
        }
    }

    fn unkey(self, k: &[i32]) -> Mono {
        match self {
            MonomialOrder::Lex => k.iter().map(|&e| e as u16).collect(),
            MonomialOrder::Grevlex => k[1..].iter().rev().map(|&e| (-e) as u16).collect(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::Grevlex => "grevlex",
            MonomialOrder::Lex => "lex",
        }
    }
}

/// A polynomial keyed by the order.
#[derive(Clone, Debug)]
struct OPoly {
    terms: BTreeMap<Vec<i32>, u64>,
}

struct Ctx {
    order: MonomialOrder,
    field: Fp,
}

impl Ctx {
    fn to_opoly(&self, f: &Poly) -> OPoly {
        OPoly { terms: f.terms().iter().map(|(m, &c)| (self.order.key(m), c)).collect() }
    }

    fn to_poly(&self, n: usize, f: &OPoly) -> Poly {
        let mut out = Poly::zero(n, self.field);
        for (k, &c) in &f.terms {
            out.add_term(self.order.unkey(k), c);
        }
        out
    }

    fn lead(&self, f: &OPoly) -> Option<(Mono, u64)> {
        f.terms.iter().next_back().map(|(k, &c)| (self.order.unkey(k), c))
    }

    /// `f - c · x^m · g`.
    fn sub_mul(&self, f: &mut OPoly, c: u64, m: &[u16], g: &OPoly) {
        for (k, &v) in &g.terms {
            let gm = self.order.unkey(k);
            let prod: Mono = gm.iter().zip(m).map(|(a, b)| a + b).collect();
            let key = self.order.key(&prod);
            let e = f.terms.entry(key.clone()).or_insert(0);
            *e = self.field.sub(*e, self.field.mul(c, v));
            if *e == 0 {
                f.terms.remove(&key);
            }
        }
    }

    fn monic(&self, f: &mut OPoly) {
        if let Some((_, c)) = self.lead(f) {
            let inv = self.field.inv(c).expect("nonzero lead");
            for v in f.terms.values_mut() {
                *v = self.field.mul(*v, inv);
            }
        }
    }

    /// Full reduction of `f` by the monic polynomials `gs`.
    fn reduce(&self, f: &OPoly, gs: &[(Mono, OPoly)]) -> OPoly {
        let mut f = f.clone();
        let mut rem = OPoly { terms: BTreeMap::new() };
        while let Some((key, c)) = f.terms.iter().next_back().map(|(k, &c)| (k.clone(), c)) {
            let m = self.order.unkey(&key);
            match gs.iter().find(|(lm, _)| divides(lm, &m)) {
                Some((lm, g)) => {
                    let q: Mono = m.iter().zip(lm).map(|(a, b)| a - b).collect();
                    self.sub_mul(&mut f, c, &q, g);
                }
                None => {
                    f.terms.remove(&key);
                    rem.terms.insert(key, c);
                }
            }
        }
        rem
    }
}

fn divides(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u16], b: &[u16]) -> Mono {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn coprime(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// A reduced Gröbner basis with monic elements.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    n: usize,
    field: Fp,
    order: MonomialOrder,
    elems: Vec<(Mono, OPoly)>,
}

impl GroebnerBasis {
    pub fn new(gens: &[Poly], order: MonomialOrder) -> Self {
        let first = gens.first().expect("at least one generator");
        let (n, field) = (first.n(), first.field());
        let ctx = Ctx { order, field };
        let mut basis: Vec<(Mono, OPoly)> = Vec::new();
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for g in gens {
            let mut h = ctx.reduce(&ctx.to_opoly(g), &basis);
            if let Some((lm, _)) = ctx.lead(&h) {
                ctx.monic(&mut h);
                pairs.extend((0..basis.len()).map(|i| (i, basis.len())));
                basis.push((lm, h));
            }
        }
        while let Some((i, j)) = pairs.pop() {
            let (li, lj) = (&basis[i].0, &basis[j].0);
            if coprime(li, lj) {
                continue;
            }
            let l = lcm(li, lj);
            let qi: Mono = l.iter().zip(li).map(|(a, b)| a - b).collect();
            let qj: Mono = l.iter().zip(lj).map(|(a, b)| a - b).collect();
            let mut s = OPoly { terms: BTreeMap::new() };
            ctx.sub_mul(&mut s, field.neg(1), &qi, &basis[i].1);
            ctx.sub_mul(&mut s, 1, &qj, &basis[j].1);
            let mut h = ctx.reduce(&s, &basis);
            if let Some((lm, _)) = ctx.lead(&h) {
                ctx.monic(&mut h);
                pairs.extend((0..basis.len()).map(|k| (k, basis.len())));
                basis.push((lm, h));
            }
        }
        // minimalize, then inter-reduce
        let mut minimal: Vec<(Mono, OPoly)> = Vec::new();
        for (k, (lm, g)) in basis.iter().enumerate() {
            let redundant = basis.iter().enumerate().any(|(j, (lj, _))| {
                j != k && divides(lj, lm) && (lj != lm || j < k)
            });
            if !redundant {
                minimal.push((lm.clone(), g.clone()));
            }
        }
        let mut reduced = Vec::with_capacity(minimal.len());
        for k in 0..minimal.len() {
            let (lm, g) = &minimal[k];
            let others: Vec<(Mono, OPoly)> =
                minimal.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, e)| e.clone()).collect();
            let mut tail = g.clone();
            let lead_key = order.key(lm);
            let lead_c = tail.terms.remove(&lead_key).expect("lead present");
            let mut r = ctx.reduce(&tail, &others);
            r.terms.insert(lead_key, lead_c);
            reduced.push((lm.clone(), r));
        }
        reduced.sort_by_key(|a| order.key(&a.0));
        GroebnerBasis { n, field, order, elems: reduced }
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Mono> {
        self.elems.iter().map(|(m, _)| m.clone()).collect()
    }

    pub fn polys(&self) -> Vec<Poly> {
        let ctx = Ctx { order: self.order, field: self.field };
        self.elems.iter().map(|(_, g)| ctx.to_poly(self.n, g)).collect()
    }

    /// The normal form of `f`: its unique representative supported on
    /// standard monomials.
    pub fn reduce(&self, f: &Poly) -> Poly {
        let ctx = Ctx { order: self.order, field: self.field };
        ctx.to_poly(self.n, &ctx.reduce(&ctx.to_opoly(f), &self.elems))
    }

    pub fn is_standard(&self, m: &[u16]) -> bool {
        !self.elems.iter().any(|(lm, _)| divides(lm, m))
    }

    /// Standard monomials sorted by (degree, order), or `None` if the
    /// quotient is infinite-dimensional.
    pub fn standard_monomials(&self) -> Option<Vec<Mono>> {
        let mut bounds = vec![None; self.n];
        for (lm, _) in &self.elems {
            let support: Vec<usize> = (0..self.n).filter(|&i| lm[i] > 0).collect();
            if let [i] = support[..] {
                bounds[i] = Some(bounds[i].map_or(lm[i], |b: u16| b.min(lm[i])));
            }
        }
        let bounds: Vec<u16> = bounds.into_iter().collect::<Option<_>>()?;
        let mut out = Vec::new();
        let mut cur = vec![0u16; self.n];
        loop {
            if self.is_standard(&cur) {
                out.push(cur.clone());
            }
            let mut k = 0;
            loop {
                if k == self.n {
                    out.sort_by_key(|a| self.order.key(a));
                    out.sort_by_key(|m| m.iter().map(|&e| e as usize).sum::<usize>());
                    return Some(out);
                }
                cur[k] += 1;
                if cur[k] < bounds[k] {
                    break;
                }
                cur[k] = 0;
                k += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_ideal_in_two_variables() {
        let f = Fp::new(5).unwrap();
        let gens: Vec<Poly> = (1..=2).map(|k| Poly::elementary_in_powers(2, f, k, 1)).collect();
        for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
            let gb = GroebnerBasis::new(&gens, order);
            let std = gb.standard_monomials().unwrap();
            assert_eq!(std.len(), 2, "{order:?}");
        }
    }

    #[test]
    fn reduction_is_canonical() {
        let f = Fp::new(7).unwrap();
        let n = 3;
        let gens: Vec<Poly> = (1..=n).map(|k| Poly::elementary_in_powers(n, f, k, 1)).collect();
        let gb = GroebnerBasis::new(&gens, MonomialOrder::Grevlex);
        assert_eq!(gb.standard_monomials().unwrap().len(), 6);
        // every generator reduces to zero, and so does any multiple
        for g in &gens {
            assert!(gb.reduce(g).is_zero());
            assert!(gb.reduce(&g.mul_var(1).mul_var(2)).is_zero());
        }
        let x = Poly::var(n, f, 0);
        let r = gb.reduce(&x.pow(4));
        assert!(r.terms().keys().all(|m| gb.is_standard(m)));
    }
}
