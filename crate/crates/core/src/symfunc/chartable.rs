//! Irreducible characters of `S_n` by the Murnaghan-Nakayama rule, and
//! Kostka numbers by horizontal-strip recursion.

use std::collections::HashMap;

use crate::partitions::Partition;

/// Beta-set `{lambda_i + (len - i)}` of a partition with `len` parts.
fn beta_set(lam: &[usize]) -> Vec<usize> {
    let l = lam.len();
    lam.iter().enumerate().map(|(i, &p)| p + (l - 1 - i)).collect()
}

fn from_beta(mut beta: Vec<usize>) -> Vec<usize> {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let l = beta.len();
    let mut parts: Vec<usize> = beta.iter().enumerate().map(|(i, &b)| b - (l - 1 - i)).collect();
    parts.retain(|&p| p > 0);
    parts
}

/// `chi^lam(rho)` where `rho` lists cycle lengths.
pub fn character(lam: &Partition, rho: &Partition) -> i64 {
    let mut memo: HashMap<(Vec<usize>, usize), i64> = HashMap::new();
    mn(lam.parts().to_vec(), rho.parts(), 0, &mut memo)
}

fn mn(lam: Vec<usize>, rho: &[usize], k: usize, memo: &mut HashMap<(Vec<usize>, usize), i64>) -> i64 {
    if k == rho.len() {
        return if lam.is_empty() { 1 } else { 0 };
    }
    if let Some(&v) = memo.get(&(lam.clone(), k)) {
        return v;
    }
    let len = rho[k];
    let beta = beta_set(&lam);
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        if b < len {
            continue;
        }
        let nb = b - len;
        if beta.contains(&nb) {
            continue;
        }
        // Height of the removed rim hook: beta numbers strictly between nb and b.
        let height = beta.iter().filter(|&&x| x > nb && x < b).count();
        let mut next = beta.clone();
        next[idx] = nb;
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn(from_beta(next), rho, k + 1, memo);
    }
    memo.insert((lam, k), total);
    total
}

/// Number of semistandard tableaux of shape `lam` with content `mu`.
pub fn kostka_number(lam: &Partition, mu: &Partition) -> u64 {
    let mut memo: HashMap<(Vec<usize>, usize), u64> = HashMap::new();
    ssyt(lam.parts().to_vec(), mu.parts(), mu.len(), &mut memo)
}

/// Fill the largest entry `k` as a horizontal strip of size `mu[k-1]` on the outer rim.
fn ssyt(lam: Vec<usize>, mu: &[usize], k: usize, memo: &mut HashMap<(Vec<usize>, usize), u64>) -> u64 {
    if k == 0 {
        return if lam.is_empty() { 1 } else { 0 };
    }
    let size: usize = lam.iter().sum();
    let need: usize = mu[..k].iter().sum();
    if size != need {
        return 0;
    }
    if let Some(&v) = memo.get(&(lam.clone(), k)) {
        return v;
    }
    let strip = mu[k - 1];
    let mut total = 0;
    let mut inner = lam.clone();
    strips(&lam, 0, strip, &mut inner, &mut |nu| {
        let mut nu = nu.to_vec();
        while nu.last() == Some(&0) {
            nu.pop();
        }
        total += ssyt(nu, mu, k - 1, memo);
    });
    memo.insert((lam, k), total);
    total
}

/// Enumerate `nu` with `lam / nu` a horizontal strip of `left` boxes.
fn strips(lam: &[usize], row: usize, left: usize, nu: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if row == lam.len() {
        if left == 0 {
            f(nu);
        }
        return;
    }
    let lower = lam.get(row + 1).copied().unwrap_or(0);
    let max_remove = (lam[row] - lower).min(left);
    for r in 0..=max_remove {
        nu[row] = lam[row] - r;
        strips(lam, row + 1, left - r, nu, f);
    }
    nu[row] = lam[row];
}
