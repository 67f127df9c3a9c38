//! Integer polynomial GCD in one and two variables.
//!
//! Both routines work modulo a sequence of word-sized primes: images are
//! computed in `F_P[x]` (and, for two variables, by evaluating `x` and
//! interpolating), combined by Chinese remaindering, and accepted once the
//! lifted candidate stabilizes and divides both inputs over `Z`. The leading
//! coefficient is pinned with the usual `gcd(lc(a), lc(b))` normalization, so
//! images from different primes and evaluation points are directly
//! comparable.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Dense univariate polynomial, coefficient of `x^i` at index `i`, no trailing zeros.
pub(crate) type UPoly = Vec<BigInt>;
/// Dense polynomial in `y` whose coefficients lie in `Z[x]`.
pub(crate) type BPoly = Vec<UPoly>;

type PPoly = Vec<u64>;

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn addmod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

fn submod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(sp) {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut out = Vec::with_capacity(256);
        let mut c = (1u64 << 62) - 1;
        while out.len() < 256 {
            if is_prime_u64(c) {
                out.push(c);
            }
            c -= 2;
        }
        out
    })
}

fn reduce(c: &BigInt, p: u64) -> u64 {
    c.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

// ---------------------------------------------------------------- F_P[x]

fn ptrim(v: &mut PPoly) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn prem(a: &PPoly, b: &PPoly, p: u64) -> PPoly {
    let mut r = a.clone();
    let db = b.len() - 1;
    let inv = invmod(b[db], p);
    while r.len() > db {
        let k = r.len() - 1;
        let f = mulmod(r[k], inv, p);
        if f != 0 {
            let shift = k - db;
            for (i, &bi) in b.iter().enumerate() {
                r[shift + i] = submod(r[shift + i], mulmod(f, bi, p), p);
            }
        }
        r.pop();
        ptrim(&mut r);
    }
    r
}

/// Monic gcd in `F_P[x]`; the zero polynomial is returned as empty.
fn pgcd(a: &PPoly, b: &PPoly, p: u64) -> PPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    ptrim(&mut a);
    ptrim(&mut b);
    while !b.is_empty() {
        let r = prem(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&lc) = a.last() {
        let inv = invmod(lc, p);
        for c in a.iter_mut() {
            *c = mulmod(*c, inv, p);
        }
    }
    a
}

fn peval(a: &PPoly, x: u64, p: u64) -> u64 {
    a.iter().rev().fold(0u64, |acc, &c| addmod(mulmod(acc, x, p), c, p))
}

/// Newton interpolation through `(xs[k], ys[k])`.
fn interpolate(xs: &[u64], ys: &[u64], p: u64) -> PPoly {
    let n = xs.len();
    let mut coef = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = submod(coef[i], coef[i - 1], p);
            let den = submod(xs[i], xs[i - j], p);
            coef[i] = mulmod(num, invmod(den, p), p);
        }
    }
    let mut out: PPoly = vec![0; n];
    for k in (0..n).rev() {
        // out = out * (x - xs[k]) + coef[k]
        let mut next = vec![0u64; n];
        for i in 0..n {
            if out[i] == 0 {
                continue;
            }
            if i + 1 < n {
                next[i + 1] = addmod(next[i + 1], out[i], p);
            }
            next[i] = submod(next[i], mulmod(out[i], xs[k], p), p);
        }
        next[0] = addmod(next[0], coef[k], p);
        out = next;
    }
    ptrim(&mut out);
    out
}

// ---------------------------------------------------------------- Z[x]

pub(crate) fn utrim(v: &mut UPoly) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn ucontent(a: &UPoly) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn uscale_div(a: &UPoly, d: &BigInt) -> UPoly {
    a.iter().map(|c| c / d).collect()
}

fn umul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    utrim(&mut out);
    out
}

/// `a / b` over `Z[x]` when the quotient has integer coefficients.
fn udiv_exact(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    if b.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let mut r = a.clone();
    let db = b.len() - 1;
    let lb = &b[db];
    let mut q = vec![BigInt::zero(); a.len() - db];
    while r.len() > db {
        let k = r.len() - 1;
        if !r[k].is_zero() {
            let (f, rem) = r[k].div_rem(lb);
            if !rem.is_zero() {
                return None;
            }
            let shift = k - db;
            for (i, bi) in b.iter().enumerate() {
                r[shift + i] -= &f * bi;
            }
            q[shift] = f;
        }
        r.pop();
    }
    utrim(&mut r);
    if !r.is_empty() {
        return None;
    }
    utrim(&mut q);
    Some(q)
}

fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let half: BigInt = m >> 1;
    if c > &half {
        c - m
    } else {
        c.clone()
    }
}

/// Combine `c (mod m)` with `r (mod p)`, returning a residue modulo `m * p` in `[0, m p)`.
fn crt(c: &BigInt, m: &BigInt, r: u64, p: u64) -> BigInt {
    let cm = reduce(c, p);
    let minv = invmod(reduce(m, p), p);
    let k = mulmod(submod(r, cm, p), minv, p);
    c + m * BigInt::from(k)
}

fn upositive(mut a: UPoly) -> UPoly {
    if a.last().is_some_and(|c| c.is_negative()) {
        for c in a.iter_mut() {
            *c = -&*c;
        }
    }
    a
}

/// Greatest common divisor in `Z[x]`, normalized to a positive leading coefficient.
pub(crate) fn ugcd(a: &UPoly, b: &UPoly) -> UPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    utrim(&mut a);
    utrim(&mut b);
    if a.is_empty() {
        return upositive(b);
    }
    if b.is_empty() {
        return upositive(a);
    }
    let ca = ucontent(&a);
    let cb = ucontent(&b);
    let c = ca.gcd(&cb);
    let a = uscale_div(&a, &ca);
    let b = uscale_div(&b, &cb);
    if a.len() == 1 || b.len() == 1 {
        return vec![c];
    }
    let g = a.last().unwrap().gcd(b.last().unwrap());
    let mut acc: Option<(UPoly, BigInt)> = None;
    let mut prev: Option<UPoly> = None;
    for &p in primes() {
        let la = reduce(a.last().unwrap(), p);
        let lb = reduce(b.last().unwrap(), p);
        if la == 0 || lb == 0 {
            continue;
        }
        let ap: PPoly = a.iter().map(|x| reduce(x, p)).collect();
        let bp: PPoly = b.iter().map(|x| reduce(x, p)).collect();
        let mut h = pgcd(&ap, &bp, p);
        if h.len() == 1 {
            return vec![c];
        }
        let gp = reduce(&g, p);
        for x in h.iter_mut() {
            *x = mulmod(*x, gp, p);
        }
        let take_fresh = match &acc {
            None => true,
            Some((cur, _)) => h.len() < cur.len(),
        };
        if take_fresh {
            acc = Some((h.iter().map(|&x| BigInt::from(x)).collect(), BigInt::from(p)));
            prev = None;
        } else {
            let (cur, m) = acc.as_mut().unwrap();
            if h.len() > cur.len() {
                continue;
            }
            for (ci, &hi) in cur.iter_mut().zip(h.iter()) {
                *ci = crt(ci, m, hi, p);
            }
            *m *= BigInt::from(p);
        }
        let (cur, m) = acc.as_ref().unwrap();
        let sym: UPoly = cur.iter().map(|x| symmetric(x, m)).collect();
        if prev.as_ref() == Some(&sym) {
            let cont = ucontent(&sym);
            let cand = upositive(uscale_div(&sym, &cont));
            if udiv_exact(&a, &cand).is_some() && udiv_exact(&b, &cand).is_some() {
                return cand.into_iter().map(|x| x * &c).collect();
            }
        }
        prev = Some(sym);
    }
    panic!("univariate gcd did not converge over the available primes");
}

// ---------------------------------------------------------------- Z[x][y]

pub(crate) fn btrim(v: &mut BPoly) {
    for c in v.iter_mut() {
        utrim(c);
    }
    while v.last().is_some_and(|c| c.is_empty()) {
        v.pop();
    }
}

fn bdeg_x(a: &BPoly) -> usize {
    a.iter().map(|c| c.len().saturating_sub(1)).max().unwrap_or(0)
}

fn bcontent(a: &BPoly) -> UPoly {
    let mut g: UPoly = Vec::new();
    for c in a {
        g = ugcd(&g, c);
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn bdiv_u(a: &BPoly, d: &UPoly) -> BPoly {
    a.iter().map(|c| udiv_exact(c, d).expect("content divides")).collect()
}

fn usub_assign(a: &mut UPoly, b: &UPoly) {
    if a.len() < b.len() {
        a.resize(b.len(), BigInt::zero());
    }
    for (ai, bi) in a.iter_mut().zip(b.iter()) {
        *ai -= bi;
    }
    utrim(a);
}

/// `a / b` in `Z[x][y]` when the quotient is a polynomial with integer coefficients.
pub(crate) fn bdiv_exact(a: &BPoly, b: &BPoly) -> Option<BPoly> {
    if b.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.clone();
    let mut q: BPoly = vec![Vec::new(); a.len() - db];
    while r.len() > db {
        let k = r.len() - 1;
        if !r[k].is_empty() {
            let f = udiv_exact(&r[k], lb)?;
            let shift = k - db;
            for (i, bi) in b.iter().enumerate() {
                let prod = umul(&f, bi);
                usub_assign(&mut r[shift + i], &prod);
            }
            q[shift] = f;
        }
        r.pop();
    }
    btrim(&mut r);
    if !r.is_empty() {
        return None;
    }
    btrim(&mut q);
    Some(q)
}

fn bpositive(mut a: BPoly) -> BPoly {
    let neg = a
        .last()
        .and_then(|c| c.last())
        .is_some_and(|c| c.is_negative());
    if neg {
        for c in a.iter_mut() {
            for x in c.iter_mut() {
                *x = -&*x;
            }
        }
    }
    a
}

fn bscale(a: &BPoly, s: &UPoly) -> BPoly {
    let mut out: BPoly = a.iter().map(|c| umul(c, s)).collect();
    btrim(&mut out);
    out
}

/// Greatest common divisor in `Z[x, y]`, normalized to a positive leading coefficient
/// (leading in `y`, then in `x`).
pub(crate) fn bgcd(a: &BPoly, b: &BPoly) -> BPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    btrim(&mut a);
    btrim(&mut b);
    if a.is_empty() {
        return bpositive(b);
    }
    if b.is_empty() {
        return bpositive(a);
    }
    let ca = bcontent(&a);
    let cb = bcontent(&b);
    let c = ugcd(&ca, &cb);
    let a = bdiv_u(&a, &ca);
    let b = bdiv_u(&b, &cb);
    if a.len() == 1 || b.len() == 1 {
        return vec![c];
    }
    let g = ugcd(a.last().unwrap(), b.last().unwrap());
    let bound = g.len() - 1 + bdeg_x(&a).min(bdeg_x(&b));
    let mut acc: Option<(BPoly, BigInt)> = None;
    let mut prev: Option<BPoly> = None;
    // Extra evaluation points beyond the degree bound; raised whenever a
    // stabilized candidate fails trial division (all points were unlucky).
    let mut extra = 0usize;
    for (pi, &p) in primes().iter().enumerate() {
        let npts = bound + 1 + extra;
        let ap: Vec<PPoly> = a.iter().map(|c| c.iter().map(|x| reduce(x, p)).collect()).collect();
        let bp: Vec<PPoly> = b.iter().map(|c| c.iter().map(|x| reduce(x, p)).collect()).collect();
        let la = {
            let mut v = ap.last().unwrap().clone();
            ptrim(&mut v);
            v
        };
        let lb = {
            let mut v = bp.last().unwrap().clone();
            ptrim(&mut v);
            v
        };
        if la.is_empty() || lb.is_empty() {
            continue;
        }
        let gp: PPoly = g.iter().map(|x| reduce(x, p)).collect();
        // Images at successive evaluation points, keeping only those of minimal degree.
        let mut xs: Vec<u64> = Vec::new();
        let mut images: Vec<PPoly> = Vec::new();
        let mut deg = usize::MAX;
        let mut alpha = (pi as u64 * 7919) % 1_000_003;
        while xs.len() < npts {
            alpha += 1;
            if peval(&la, alpha, p) == 0 || peval(&lb, alpha, p) == 0 {
                continue;
            }
            let ga = peval(&gp, alpha, p);
            let ea: PPoly = ap.iter().map(|c| peval(c, alpha, p)).collect();
            let eb: PPoly = bp.iter().map(|c| peval(c, alpha, p)).collect();
            let mut h = pgcd(&ea, &eb, p);
            if h.len() == 1 {
                return vec![c];
            }
            if h.len() - 1 > deg {
                continue;
            }
            if h.len() - 1 < deg {
                deg = h.len() - 1;
                xs.clear();
                images.clear();
            }
            for x in h.iter_mut() {
                *x = mulmod(*x, ga, p);
            }
            xs.push(alpha);
            images.push(h);
        }
        let hp: Vec<PPoly> = (0..=deg)
            .map(|j| {
                let ys: Vec<u64> = images.iter().map(|h| h[j]).collect();
                interpolate(&xs, &ys, p)
            })
            .collect();
        let take_fresh = match &acc {
            None => true,
            Some((cur, _)) => hp.len() < cur.len(),
        };
        if take_fresh {
            let fresh: BPoly = hp
                .iter()
                .map(|c| c.iter().map(|&x| BigInt::from(x)).collect())
                .collect();
            acc = Some((fresh, BigInt::from(p)));
            prev = None;
        } else {
            let (cur, m) = acc.as_mut().unwrap();
            if hp.len() > cur.len() {
                continue;
            }
            let width = npts;
            for (cj, hj) in cur.iter_mut().zip(hp.iter()) {
                cj.resize(width, BigInt::zero());
                for (i, ci) in cj.iter_mut().enumerate() {
                    let r = hj.get(i).copied().unwrap_or(0);
                    *ci = crt(ci, m, r, p);
                }
            }
            *m *= BigInt::from(p);
        }
        let (cur, m) = acc.as_ref().unwrap();
        let mut sym: BPoly = cur
            .iter()
            .map(|c| c.iter().map(|x| symmetric(x, m)).collect())
            .collect();
        btrim(&mut sym);
        if prev.as_ref() == Some(&sym) {
            let cont = bcontent(&sym);
            let cand = bpositive(bdiv_u(&sym, &cont));
            if bdiv_exact(&a, &cand).is_some() && bdiv_exact(&b, &cand).is_some() {
                return bscale(&cand, &c);
            }
            extra += 1;
            acc = None;
            prev = None;
            continue;
        }
        prev = Some(sym);
    }
    panic!("bivariate gcd did not converge over the available primes");
}
