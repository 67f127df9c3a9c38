//! Self-check suites over the polynomial representation and the PBW rewriter.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::fp::Fp;
use super::pbw::{CherednikAlgebra, Gen, Strategy};
use super::pcenter::{CheckResult, DunklMemo, SuiteReport};
use super::perm::Perm;
use super::poly::{monomials_of_degree, monomials_up_to, Poly};
use crate::error::Result;
use crate::partitions::factorial;

fn check(name: String, cex: Option<String>) -> CheckResult {
    CheckResult { name, passed: cex.is_none(), required: true, counterexample: cex }
}

/// Compares two operators on all monomials of degree at most `d`.
fn same_operator(
    n: usize,
    field: Fp,
    d: usize,
    mut lhs: impl FnMut(&Poly) -> Poly,
    mut rhs: impl FnMut(&Poly) -> Poly,
) -> Option<String> {
    for m in monomials_up_to(n, d) {
        let f = Poly::monomial(n, field, m, 1);
        let (a, b) = (lhs(&f), rhs(&f));
        if a != b {
            return Some(format!("on {f}: {a} vs {b}"));
        }
    }
    None
}

/// Dunkl commutativity up to `commute_degree` and every defining relation of
/// `H_c` up to `relation_degree`, with `y_i` acting as `D_i`.
pub fn dunkl_suite(n: usize, p: u64, c: u64, commute_degree: usize, relation_degree: usize) -> Result<SuiteReport> {
    let alg = CherednikAlgebra::new(n, p, c)?;
    let (field, c) = (alg.field, alg.c);
    let memo = std::cell::RefCell::new(DunklMemo::new(n, field, c));
    let dk = |i: usize, f: &Poly| memo.borrow_mut().apply(i, f);
    let swap = |i: usize, j: usize, f: &Poly| f.permute(&Perm::transposition(n, i, j));
    let mut checks = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            checks.push(check(
                format!("[D_{}, D_{}] = 0", i + 1, j + 1),
                same_operator(n, field, commute_degree, |f| dk(i, &dk(j, f)), |f| dk(j, &dk(i, f))),
            ));
        }
    }
    let d = relation_degree;
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            checks.push(check(
                format!("s_{0}{1} x_{0} = x_{1} s_{0}{1}", i + 1, j + 1),
                same_operator(n, field, d, |f| swap(i, j, &f.mul_var(i)), |f| swap(i, j, f).mul_var(j)),
            ));
            checks.push(check(
                format!("s_{0}{1} D_{0} = D_{1} s_{0}{1}", i + 1, j + 1),
                same_operator(n, field, d, |f| swap(i, j, &dk(i, f)), |f| dk(j, &swap(i, j, f))),
            ));
            checks.push(check(
                format!("[D_{}, x_{}] = c s_{}{}", i + 1, j + 1, i.min(j) + 1, i.max(j) + 1),
                same_operator(
                    n,
                    field,
                    d,
                    |f| dk(i, &f.mul_var(j)).sub(&dk(i, f).mul_var(j)),
                    |f| swap(i, j, f).scale(c),
                ),
            ));
            checks.push(check(
                format!("[x_{}, x_{}] = 0", i + 1, j + 1),
                same_operator(n, field, d, |f| f.mul_var(j).mul_var(i), |f| f.mul_var(i).mul_var(j)),
            ));
        }
        checks.push(check(
            format!("[D_{0}, x_{0}] = 1 - c sum s_i{0}", i + 1),
            same_operator(
                n,
                field,
                d,
                |f| dk(i, &f.mul_var(i)).sub(&dk(i, f).mul_var(i)),
                |f| {
                    let mut r = f.clone();
                    for k in (0..n).filter(|&k| k != i) {
                        r = r.sub(&swap(i, k, f).scale(c));
                    }
                    r
                },
            ),
        ));
    }
    Ok(SuiteReport::new("dunkl", n, p, c, checks))
}

pub fn random_word(alg: &CherednikAlgebra, rng: &mut impl Rng, max_len: usize) -> Vec<Gen> {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let i = rng.gen_range(0..alg.n);
            match rng.gen_range(0..3) {
                0 => alg.x(i),
                1 => alg.y(i),
                _ => {
                    let j = rng.gen_range(0..alg.n);
                    Gen::W(Perm::transposition(alg.n, i, j))
                }
            }
        })
        .collect()
}

/// Number of PBW monomials `x^a w y^b` with `|a| = d1`, `|b| = d2`: the
/// dimension of the `(d1, d2)` piece of `k[h ⊕ h*] # S_n`.
pub fn pbw_graded_dim(n: usize, d1: usize, d2: usize) -> usize {
    monomials_of_degree(n, d1).len() * factorial(n) as usize * monomials_of_degree(n, d2).len()
}

/// Rank of the operators `x^a w y^b` (`|a| ≤ d1`, `|b| ≤ d2`) on polynomials
/// of degree at most `domain_degree`.
pub fn pbw_operator_rank(alg: &CherednikAlgebra, d1: usize, d2: usize, domain_degree: usize) -> usize {
    let n = alg.n;
    let field = alg.field;
    let domain = monomials_up_to(n, domain_degree);
    let codomain = monomials_up_to(n, domain_degree + d1);
    let cod_index: std::collections::HashMap<_, _> = codomain.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
    let mut rows = Vec::new();
    for a in monomials_up_to(n, d1) {
        for w in Perm::all(n) {
            for b in monomials_up_to(n, d2) {
                let u = alg.from_term((a.clone(), w.clone(), b), 1);
                let mut row = vec![0u64; domain.len() * codomain.len()];
                for (k, m) in domain.iter().enumerate() {
                    let img = alg.act_on_poly(&u, &Poly::monomial(n, field, m.clone(), 1));
                    for (mm, &c) in img.terms() {
                        row[k * codomain.len() + cod_index[mm]] = c;
                    }
                }
                rows.push(row);
            }
        }
    }
    field.rank(&rows)
}

/// Rewriting checks: the defining-relation examples, confluence of two
/// reduction strategies on random words, the anti-involution, and PBW
/// independence through the Dunkl representation.
pub fn pbw_suite(n: usize, p: u64, c: u64, words: usize, seed: u64) -> Result<SuiteReport> {
    let alg = CherednikAlgebra::new(n, p, c)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();

    let mut confluence = None;
    let mut anti = None;
    for _ in 0..words {
        let w = random_word(&alg, &mut rng, 8);
        let left = alg.normalize_with(&w, Strategy::Leftmost);
        let right = alg.normalize_with(&w, Strategy::Rightmost);
        if left != right && confluence.is_none() {
            confluence = Some(format!("{}: {left} vs {right}", show(&w)));
        }
        let u = random_word(&alg, &mut rng, 4);
        let v = random_word(&alg, &mut rng, 4);
        let mut uv = u.clone();
        uv.extend(v.iter().cloned());
        let lhs = alg.normalize(&CherednikAlgebra::anti_involution_word(&uv));
        let rhs = alg.mul(&alg.anti_involution(&alg.normalize(&v)), &alg.anti_involution(&alg.normalize(&u)));
        let direct = alg.anti_involution(&alg.normalize(&uv));
        if (lhs != rhs || lhs != direct) && anti.is_none() {
            anti = Some(format!("u = {}, v = {}", show(&u), show(&v)));
        }
    }
    checks.push(check(format!("leftmost = rightmost on {words} random words"), confluence));
    checks.push(check("anti-involution is an anti-homomorphism".into(), anti));

    let (d1, d2) = if n <= 2 { (2, 2) } else { (1, 1) };
    // The sign-isotypic operators first act nontrivially on the Vandermonde,
    // so the test polynomials must reach past its degree n(n-1)/2.
    let domain = d1 + d2 + n * (n - 1) / 2 + 1;
    let expected: usize = (0..=d1).flat_map(|a| (0..=d2).map(move |b| pbw_graded_dim(n, a, b))).sum();
    let rank = pbw_operator_rank(&alg, d1, d2, domain);
    checks.push(check(
        format!("PBW monomials with |a| <= {d1}, |b| <= {d2} act independently"),
        (rank != expected).then(|| format!("rank {rank}, expected {expected}")),
    ));
    Ok(SuiteReport::new("pbw", n, p, c, checks))
}

fn show(w: &[Gen]) -> String {
    let s: Vec<String> = w.iter().map(Gen::to_string).collect();
    if s.is_empty() {
        "1".into()
    } else {
        s.join("*")
    }
}
