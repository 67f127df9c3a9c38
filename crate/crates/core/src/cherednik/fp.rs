//! Arithmetic in the prime field `F_p` and dense linear algebra over it.
//!
//! Elements are plain `u64` residues in `[0, p)`. Products go through `u128`,
//! so any `p < 2^63` works; the algebra code only uses small primes.

use crate::error::{Error, Result};
use crate::exactqt::is_prime_u64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Fp { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn reduce(&self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Inverse by Fermat; `None` for zero.
    pub fn inv(&self, a: u64) -> Option<u64> {
        (!a.is_multiple_of(self.p)).then(|| self.pow(a, self.p - 2))
    }

    /// The residue of `k!`.
    pub fn factorial(&self, k: u64) -> u64 {
        (1..=k).fold(1 % self.p, |acc, i| self.mul(acc, i % self.p))
    }

    /// Residue of `i` as a field element.
    pub fn from_u64(&self, i: u64) -> u64 {
        i % self.p
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn row_reduce(&self, m: &mut [Vec<u64>]) -> Vec<usize> {
        let rows = m.len();
        let cols = m.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..cols {
            if r == rows {
                break;
            }
            let Some(piv) = (r..rows).find(|&i| m[i][col] != 0) else {
                continue;
            };
            m.swap(r, piv);
            let inv = self.inv(m[r][col]).expect("pivot is nonzero");
            for x in m[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            let pivot_row = m[r].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i != r && row[col] != 0 {
                    let f = row[col];
                    for (x, &y) in row.iter_mut().zip(&pivot_row) {
                        if y != 0 {
                            *x = self.sub(*x, self.mul(f, y));
                        }
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, m: &[Vec<u64>]) -> usize {
        let mut a = m.to_vec();
        self.row_reduce(&mut a).len()
    }

    /// A basis of `{v : m v = 0}`.
    pub fn nullspace(&self, m: &[Vec<u64>], cols: usize) -> Vec<Vec<u64>> {
        let mut a = m.to_vec();
        let pivots = self.row_reduce(&mut a);
        let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0; cols];
                v[f] = 1;
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = self.neg(a[row][f]);
                }
                v
            })
            .collect()
    }

    pub fn mat_mul(&self, a: &[Vec<u64>], b: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let inner = b.len();
        let cols = b.first().map_or(0, Vec::len);
        a.iter()
            .map(|row| {
                (0..cols)
                    .map(|j| (0..inner).fold(0, |acc, k| self.add(acc, self.mul(row[k], b[k][j]))))
                    .collect()
            })
            .collect()
    }

    pub fn transpose(m: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let cols = m.first().map_or(0, Vec::len);
        (0..cols).map(|j| m.iter().map(|row| row[j]).collect()).collect()
    }

    pub fn identity(k: usize) -> Vec<Vec<u64>> {
        (0..k).map(|i| (0..k).map(|j| (i == j) as u64).collect()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_ops() {
        let f = Fp::new(7).unwrap();
        assert_eq!(f.mul(3, 5), 1);
        assert_eq!(f.inv(3), Some(5));
        assert_eq!(f.inv(0), None);
        assert_eq!(f.reduce(-1), 6);
        assert_eq!(f.factorial(6), 6);
        assert_eq!(Fp::new(9), Err(Error::NotPrime(9)));
    }

    #[test]
    fn rank_and_nullspace() {
        let f = Fp::new(5).unwrap();
        let m = vec![vec![1, 2, 3], vec![0, 1, 4], vec![1, 3, 2]];
        // third row is the sum of the first two mod 5
        assert_eq!(f.rank(&m), 2);
        let ns = f.nullspace(&m, 3);
        assert_eq!(ns.len(), 1);
        for row in &m {
            let dot = (0..3).fold(0, |acc, j| f.add(acc, f.mul(row[j], ns[0][j])));
            assert_eq!(dot, 0);
        }
    }
}
