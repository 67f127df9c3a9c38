//! Irreducible `S_n`-modules over `F_p` (`p > n`) in Young's seminormal form.
//!
//! The basis is the standard Young tableaux of shape `τ`. For the adjacent
//! transposition `s_k` and a tableau `T` with axial distance
//! `r = content(k+1) - content(k)`:
//!
//! - `k, k+1` in the same row: `s_k v_T = v_T`;
//! - same column: `s_k v_T = -v_T`;
//! - otherwise, with `T' = s_k T`: `s_k v_T = r^{-1} v_T + v_{T'}` when `k+1`
//!   lies in a lower row of `T`, and `s_k v_T = r^{-1} v_T + (1 - r^{-2}) v_{T'}`
//!   when it lies in a higher row.
//!
//! The axial distances are bounded by `n - 1 < p`, so every `r` is invertible.

use super::fp::Fp;
use super::perm::Perm;
use crate::partitions::Partition;

type Tableau = Vec<(usize, usize)>; // position of each entry 0..n

#[derive(Clone, Debug)]
pub struct SpechtModule {
    pub shape: Partition,
    field: Fp,
    tableaux: Vec<Tableau>,
    /// `adjacent[k]` is the matrix of `s_k`, columns are images.
    adjacent: Vec<Vec<Vec<u64>>>,
    form: Vec<Vec<u64>>,
}

fn standard_tableaux(shape: &Partition) -> Vec<Tableau> {
    fn go(shape: &[usize], filled: &mut Vec<usize>, cur: &mut Tableau, out: &mut Vec<Tableau>, n: usize) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for r in 0..shape.len() {
            let s = filled[r];
            if s < shape[r] && (r == 0 || filled[r - 1] > s) {
                filled[r] += 1;
                cur.push((r, s));
                go(shape, filled, cur, out, n);
                cur.pop();
                filled[r] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    let mut filled = vec![0; shape.len()];
    go(shape.parts(), &mut filled, &mut Vec::new(), &mut out, shape.n());
    out
}

impl SpechtModule {
    pub fn new(shape: &Partition, field: Fp) -> Self {
        let n = shape.n();
        let tableaux = standard_tableaux(shape);
        let dim = tableaux.len();
        let index = |t: &Tableau| tableaux.iter().position(|u| u == t).expect("standard tableau");
        let mut adjacent = Vec::new();
        for k in 0..n.saturating_sub(1) {
            let mut m = vec![vec![0u64; dim]; dim];
            for (col, t) in tableaux.iter().enumerate() {
                let (a, b) = (t[k], t[k + 1]);
                if a.0 == b.0 {
                    m[col][col] = 1;
                } else if a.1 == b.1 {
                    m[col][col] = field.neg(1);
                } else {
                    let r = (b.1 as i64 - b.0 as i64) - (a.1 as i64 - a.0 as i64);
                    let rinv = field.inv(field.reduce(r)).expect("axial distance below p");
                    let mut swapped = t.clone();
                    swapped.swap(k, k + 1);
                    let other = index(&swapped);
                    m[col][col] = rinv;
                    m[other][col] = if b.0 > a.0 { 1 } else { field.sub(1, field.mul(rinv, rinv)) };
                }
            }
            adjacent.push(m);
        }
        let mut module = SpechtModule { shape: shape.clone(), field, tableaux, adjacent, form: Vec::new() };
        module.form = module.invariant_form();
        module
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn adjacent(&self, k: usize) -> &[Vec<u64>] {
        &self.adjacent[k]
    }

    /// The matrix of an arbitrary permutation.
    pub fn matrix(&self, w: &Perm) -> Vec<Vec<u64>> {
        w.reduced_word()
            .iter()
            .fold(Fp::identity(self.dim()), |acc, &k| self.field.mat_mul(&acc, &self.adjacent[k]))
    }

    /// The `S_n`-invariant symmetric bilinear form, unique up to scalar,
    /// normalized so that its first nonzero diagonal entry is 1.
    pub fn form(&self) -> &[Vec<u64>] {
        &self.form
    }

    fn invariant_form(&self) -> Vec<Vec<u64>> {
        let d = self.dim();
        let f = self.field;
        // unknowns B[i][j]; equations: s^T B s = B for each generator, B = B^T
        let var = |i: usize, j: usize| i * d + j;
        let mut eqs: Vec<Vec<u64>> = Vec::new();
        for s in &self.adjacent {
            for i in 0..d {
                for j in 0..d {
                    let mut row = vec![0u64; d * d];
                    for a in 0..d {
                        for b in 0..d {
                            let coef = f.mul(s[a][i], s[b][j]);
                            row[var(a, b)] = f.add(row[var(a, b)], coef);
                        }
                    }
                    row[var(i, j)] = f.sub(row[var(i, j)], 1);
                    eqs.push(row);
                }
            }
        }
        for i in 0..d {
            for j in i + 1..d {
                let mut row = vec![0u64; d * d];
                row[var(i, j)] = 1;
                row[var(j, i)] = f.neg(1);
                eqs.push(row);
            }
        }
        let sol = if eqs.is_empty() {
            vec![vec![1]]
        } else {
            f.nullspace(&eqs, d * d)
        };
        assert_eq!(sol.len(), 1, "invariant form of an absolutely irreducible module is unique");
        let v = &sol[0];
        let lead = (0..d).map(|i| v[var(i, i)]).find(|&x| x != 0).expect("form is nondegenerate");
        let inv = f.inv(lead).expect("nonzero");
        (0..d).map(|i| (0..d).map(|j| f.mul(v[var(i, j)], inv)).collect()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_of;
    use crate::symfunc::character;

    fn cycle_type(w: &Perm) -> Partition {
        let n = w.n();
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        for i in 0..n {
            if !seen[i] {
                let mut len = 0;
                let mut j = i;
                while !seen[j] {
                    seen[j] = true;
                    j = w.apply(j);
                    len += 1;
                }
                parts.push(len);
            }
        }
        Partition::from_unsorted(parts)
    }

    #[test]
    fn relations_and_characters() {
        let f = Fp::new(7).unwrap();
        for n in 1..=5 {
            for lam in partitions_of(n) {
                let m = SpechtModule::new(&lam, f);
                let id = Fp::identity(m.dim());
                for k in 0..n - 1 {
                    let s = m.adjacent(k);
                    assert_eq!(f.mat_mul(s, s), id, "{lam} s_{k}^2");
                    if k + 2 < n {
                        let t = m.adjacent(k + 1);
                        let sts = f.mat_mul(&f.mat_mul(s, t), s);
                        let tst = f.mat_mul(&f.mat_mul(t, s), t);
                        assert_eq!(sts, tst, "{lam} braid at {k}");
                    }
                    for j in k + 2..n - 1 {
                        let t = m.adjacent(j);
                        assert_eq!(f.mat_mul(s, t), f.mat_mul(t, s));
                    }
                }
                for w in Perm::all(n) {
                    let mw = m.matrix(&w);
                    let trace = (0..m.dim()).fold(0, |acc, i| f.add(acc, mw[i][i]));
                    assert_eq!(trace, f.reduce(character(&lam, &cycle_type(&w))), "{lam} at {w}");
                    // invariance of the form
                    let gram = f.mat_mul(&f.mat_mul(&Fp::transpose(&mw), m.form()), &mw);
                    assert_eq!(gram, m.form());
                }
            }
        }
    }
}
