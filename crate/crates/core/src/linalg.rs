//! Dense exact linear algebra over `Q` and `Q(q,t)`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactqt::{BigRat, RatQT};

pub trait Field: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn inv(&self) -> Option<Self>;
}

impl Field for BigRat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

impl Field for RatQT {
    fn zero() -> Self {
        RatQT::zero()
    }
    fn one() -> Self {
        RatQT::one()
    }
    fn is_zero(&self) -> bool {
        RatQT::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn inv(&self) -> Option<Self> {
        RatQT::inv(self).ok()
    }
}

pub type Matrix<T> = Vec<Vec<T>>;

pub fn identity<T: Field>(n: usize) -> Matrix<T> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect())
        .collect()
}

pub fn mat_mul<T: Field>(a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
    let m = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..m)
                .map(|j| {
                    row.iter()
                        .zip(b.iter())
                        .filter(|(x, _)| !x.is_zero())
                        .fold(T::zero(), |acc, (x, brow)| acc.add(&x.mul(&brow[j])))
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec<T: Field>(a: &Matrix<T>, v: &[T]) -> Vec<T> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(x, y)| !x.is_zero() && !y.is_zero())
                .fold(T::zero(), |acc, (x, y)| acc.add(&x.mul(y)))
        })
        .collect()
}

pub fn transpose<T: Clone>(a: &Matrix<T>) -> Matrix<T> {
    let m = a.first().map_or(0, |r| r.len());
    (0..m).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Solve `a x = b` for each column of `b` by Gauss-Jordan elimination.
pub fn solve<T: Field>(a: &Matrix<T>, b: &Matrix<T>) -> Result<Matrix<T>> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) || b.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: b.len(),
        });
    }
    let m = b.first().map_or(0, |r| r.len());
    let mut aug: Matrix<T> = a
        .iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().chain(rb.iter()).cloned().collect())
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !aug[r][col].is_zero())
            .ok_or(Error::SingularMatrix)?;
        aug.swap(col, piv);
        let inv = aug[col][col].inv().ok_or(Error::SingularMatrix)?;
        let prow: Vec<T> = aug[col].iter().map(|x| x.mul(&inv)).collect();
        aug[col] = prow.clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, px) in row.iter_mut().zip(prow.iter()).skip(col) {
                if !px.is_zero() {
                    *x = x.sub(&f.mul(px));
                }
            }
        }
    }
    Ok(aug.into_iter().map(|r| r[n..n + m].to_vec()).collect())
}

pub fn inverse<T: Field>(a: &Matrix<T>) -> Result<Matrix<T>> {
    solve(a, &identity(a.len()))
}

/// Determinant by elimination over a field.
pub fn det<T: Field>(a: &Matrix<T>) -> T {
    let n = a.len();
    let mut m = a.clone();
    let mut d = T::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return T::zero();
        };
        if piv != col {
            m.swap(piv, col);
            d = T::zero().sub(&d);
        }
        d = d.mul(&m[col][col]);
        let inv = m[col][col].inv().unwrap();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].mul(&inv);
            let (top, bottom) = m.split_at_mut(r);
            for (x, y) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *x = x.sub(&f.mul(y));
            }
        }
    }
    d
}

/// Evaluate a q,t-matrix at `q^(1/2) = qh`, `t^(1/2) = th`.
pub fn eval_matrix(a: &Matrix<RatQT>, qh: &BigRat, th: &BigRat) -> Option<Matrix<BigRat>> {
    a.iter()
        .map(|r| r.iter().map(|x| x.eval_half(qh, th)).collect::<Option<Vec<_>>>())
        .collect()
}

/// Certify `det(a) != 0` in `Q(q,t)` by exhibiting a rational point where it is nonzero.
pub fn is_generically_invertible(a: &Matrix<RatQT>) -> bool {
    let pts = [(3i64, 5i64), (7, 2), (11, 13), (2, 17)];
    pts.iter().any(|&(x, y)| {
        let qh = BigRat::from_integer(x.into());
        let th = BigRat::from_integer(y.into());
        eval_matrix(a, &qh, &th).is_some_and(|m| !Zero::is_zero(&det(&m)))
    })
}
