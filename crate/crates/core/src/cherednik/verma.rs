//! Baby Verma modules `Δ(τ) = F_p[x] / (e_k(x_1^p, .., x_n^p)) ⊗ τ`.
//!
//! The invariants `e_k(x^p)` are central in `H_c`, so the quotient is an
//! `H_c`-module. On `f ⊗ v` the operators act by
//!
//! ```text
//! x_i (f ⊗ v) = x_i f ⊗ v
//! w   (f ⊗ v) = w f ⊗ w v
//! y_i (f ⊗ v) = ∂_i f ⊗ v - c Σ_{j≠i} (f - s_ij f)/(x_i - x_j) ⊗ s_ij v
//! ```
//!
//! The contravariant form uses the anti-involution `x_i ↔ y_i`, `w ↦ w^{-1}`
//! and the invariant form on `τ` in degree zero, so
//! `B(a, x_i b) = B(y_i a, b)`. Gram matrices are built degree by degree from
//! that identity.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::fp::Fp;
use super::groebner::{GroebnerBasis, MonomialOrder};
use super::perm::Perm;
use super::poly::{total_degree, Mono, Poly};
use super::specht::SpechtModule;
use crate::error::{Error, Result};
use crate::partitions::{factorial, Partition};

/// Dimensions by x-degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct GradedCharacter {
    pub coeffs: BTreeMap<i64, u64>,
}

impl GradedCharacter {
    pub fn total(&self) -> u64 {
        self.coeffs.values().sum()
    }

    pub fn top_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }
}

/// Sparse matrix stored by columns: `cols[j]` is the image of basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    pub dim: usize,
    pub cols: Vec<Vec<(usize, u64)>>,
}

impl SparseMatrix {
    pub fn apply(&self, field: Fp, v: &[u64]) -> Vec<u64> {
        let mut out = vec![0; self.dim];
        for (j, &vj) in v.iter().enumerate() {
            if vj != 0 {
                for &(i, a) in &self.cols[j] {
                    out[i] = field.add(out[i], field.mul(a, vj));
                }
            }
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<u64>> {
        let mut m = vec![vec![0; self.dim]; self.dim];
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, a) in col {
                m[i][j] = a;
            }
        }
        m
    }
}

#[derive(Clone, Debug)]
pub struct VermaModule {
    pub n: usize,
    pub p: u64,
    pub c: u64,
    pub tau: Partition,
    pub order: MonomialOrder,
    field: Fp,
    gb: GroebnerBasis,
    monomials: Vec<Mono>,
    mono_index: HashMap<Mono, usize>,
    specht: SpechtModule,
    /// Multiplication by `x_i`.
    pub x: Vec<SparseMatrix>,
    /// The operators `y_i`.
    pub y: Vec<SparseMatrix>,
    /// Adjacent transpositions `s_k = (k, k+1)`.
    pub s: Vec<SparseMatrix>,
}

enum Job {
    X(usize),
    Y(usize),
    S(usize),
}

impl VermaModule {
    pub fn expected_dim(n: usize, p: u64, tau: &Partition) -> usize {
        let tau_dim = crate::partitions::syt_count(tau) as usize;
        (p as usize).pow(n as u32) * factorial(n) as usize * tau_dim
    }

    /// Top x-degree of the quotient ring: `n(p-1) + p n(n-1)/2`.
    pub fn top_degree(n: usize, p: u64) -> usize {
        n * (p as usize - 1) + p as usize * n * (n - 1) / 2
    }

    pub fn build(n: usize, p: u64, c: u64, tau: &Partition) -> Result<Self> {
        Self::build_with_order(n, p, c, tau, MonomialOrder::Grevlex)
    }

    pub fn build_with_order(n: usize, p: u64, c: u64, tau: &Partition, order: MonomialOrder) -> Result<Self> {
        let field = Fp::new(p)?;
        if p <= n as u64 {
            return Err(Error::PrimeTooSmall { p, n });
        }
        if tau.n() != n {
            return Err(Error::DegreeMismatch { left: tau.n(), right: n });
        }
        let gens: Vec<Poly> = (1..=n).map(|k| Poly::elementary_in_powers(n, field, k, p as u16)).collect();
        let gb = GroebnerBasis::new(&gens, order);
        let monomials = gb.standard_monomials().expect("the quotient by e_k(x^p) is finite");
        let specht = SpechtModule::new(tau, field);
        let expected = Self::expected_dim(n, p, tau);
        let found = monomials.len() * specht.dim();
        if found != expected {
            return Err(Error::DimensionMismatch { expected, found });
        }
        let mono_index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let mut module = VermaModule {
            n,
            p,
            c: c % p,
            tau: tau.clone(),
            order,
            field,
            gb,
            monomials,
            mono_index,
            specht,
            x: Vec::new(),
            y: Vec::new(),
            s: Vec::new(),
        };
        let jobs: Vec<Job> = (0..n)
            .map(Job::X)
            .chain((0..n).map(Job::Y))
            .chain((0..n - 1).map(Job::S))
            .collect();
        let mats: Vec<SparseMatrix> = jobs
            .par_iter()
            .map(|job| match job {
                Job::X(i) => module.x_matrix(*i),
                Job::Y(i) => module.y_matrix(*i),
                Job::S(k) => module.s_matrix(*k),
            })
            .collect();
        let mut it = mats.into_iter();
        module.x = it.by_ref().take(n).collect();
        module.y = it.by_ref().take(n).collect();
        module.s = it.collect();
        Ok(module)
    }

    pub fn dim(&self) -> usize {
        self.monomials.len() * self.specht.dim()
    }

    pub fn tau_dim(&self) -> usize {
        self.specht.dim()
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn monomials(&self) -> &[Mono] {
        &self.monomials
    }

    pub fn groebner(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn index(&self, mono: usize, v: usize) -> usize {
        mono * self.specht.dim() + v
    }

    pub fn degree_of(&self, basis_index: usize) -> usize {
        total_degree(&self.monomials[basis_index / self.specht.dim()])
    }

    /// Basis indices of x-degree `d`.
    pub fn degree_piece(&self, d: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.degree_of(b) == d).collect()
    }

    pub fn character(&self) -> GradedCharacter {
        let mut coeffs = BTreeMap::new();
        for b in 0..self.dim() {
            *coeffs.entry(self.degree_of(b) as i64).or_insert(0) += 1;
        }
        GradedCharacter { coeffs }
    }

    /// Coordinates of `f ⊗ e_v` after reduction modulo the ideal.
    fn coords(&self, f: &Poly, v: &[u64], out: &mut BTreeMap<usize, u64>) {
        let nf = self.gb.reduce(f);
        for (m, &a) in nf.terms() {
            let mi = self.mono_index[m];
            for (t, &b) in v.iter().enumerate() {
                if b != 0 {
                    let e = out.entry(self.index(mi, t)).or_insert(0);
                    *e = self.field.add(*e, self.field.mul(a, b));
                }
            }
        }
    }

    fn unit(&self, t: usize) -> Vec<u64> {
        let mut v = vec![0; self.specht.dim()];
        v[t] = 1;
        v
    }

    fn assemble(&self, image: impl Fn(&Poly, usize, &mut BTreeMap<usize, u64>)) -> SparseMatrix {
        let dim = self.dim();
        let mut cols = vec![Vec::new(); dim];
        for (mi, m) in self.monomials.iter().enumerate() {
            let f = Poly::monomial(self.n, self.field, m.clone(), 1);
            for t in 0..self.specht.dim() {
                let mut out = BTreeMap::new();
                image(&f, t, &mut out);
                cols[self.index(mi, t)] = out.into_iter().filter(|(_, a)| *a != 0).collect();
            }
        }
        SparseMatrix { dim, cols }
    }

    fn x_matrix(&self, i: usize) -> SparseMatrix {
        self.assemble(|f, t, out| self.coords(&f.mul_var(i), &self.unit(t), out))
    }

    fn s_matrix(&self, k: usize) -> SparseMatrix {
        let sk = self.specht.adjacent(k);
        self.assemble(|f, t, out| {
            let col: Vec<u64> = (0..self.specht.dim()).map(|r| sk[r][t]).collect();
            self.coords(&f.swap(k, k + 1), &col, out)
        })
    }

    fn y_matrix(&self, i: usize) -> SparseMatrix {
        let f = self.field;
        let reflections: Vec<(usize, Vec<Vec<u64>>)> = (0..self.n)
            .filter(|&j| j != i)
            .map(|j| (j, self.specht.matrix(&Perm::transposition(self.n, i, j))))
            .collect();
        self.assemble(|g, t, out| {
            self.coords(&g.derivative(i), &self.unit(t), out);
            if self.c != 0 {
                for (j, sij) in &reflections {
                    let col: Vec<u64> = (0..self.specht.dim()).map(|r| f.mul(f.neg(self.c), sij[r][t])).collect();
                    self.coords(&g.divided_difference(i, *j), &col, out);
                }
            }
        })
    }

    /// Gram matrices of the contravariant form for degrees `0..=d`, indexed by
    /// [`VermaModule::degree_piece`].
    pub fn gram_matrices(&self, d: usize) -> Vec<Vec<Vec<u64>>> {
        let f = self.field;
        let mut grams: Vec<Vec<Vec<u64>>> = Vec::with_capacity(d + 1);
        let mut pieces: Vec<Vec<usize>> = Vec::with_capacity(d + 1);
        let mut position: HashMap<usize, usize> = HashMap::new();
        for e in 0..=d {
            let piece = self.degree_piece(e);
            for (k, &b) in piece.iter().enumerate() {
                position.insert(b, k);
            }
            let gram = if e == 0 {
                piece
                    .iter()
                    .map(|&a| piece.iter().map(|&b| self.specht.form()[a % self.tau_dim()][b % self.tau_dim()]).collect())
                    .collect()
            } else {
                let prev = &grams[e - 1];
                let td = self.tau_dim();
                let mut g = vec![vec![0u64; piece.len()]; piece.len()];
                for (col, &b) in piece.iter().enumerate() {
                    let (mi, v) = (b / td, b % td);
                    let m = &self.monomials[mi];
                    let i = m.iter().position(|&x| x > 0).expect("positive degree");
                    let mut lower = m.clone();
                    lower[i] -= 1;
                    let prev_col = position[&self.index(self.mono_index[&lower], v)];
                    for (row, &a) in piece.iter().enumerate() {
                        let mut acc = 0;
                        for &(cidx, ya) in &self.y[i].cols[a] {
                            acc = f.add(acc, f.mul(ya, prev[position[&cidx]][prev_col]));
                        }
                        g[row][col] = acc;
                    }
                }
                g
            };
            grams.push(gram);
            pieces.push(piece);
        }
        grams
    }

    pub fn contravariant_gram(&self, d: usize) -> Vec<Vec<u64>> {
        self.gram_matrices(d).pop().expect("degree 0 is always present")
    }

    /// The character of the simple head `L(τ) = Δ(τ) / ker B`.
    pub fn simple_character(&self) -> GradedCharacter {
        let top = self.character().top_degree().unwrap_or(0) as usize;
        let grams = self.gram_matrices(top);
        let coeffs = grams
            .par_iter()
            .enumerate()
            .map(|(d, g)| (d as i64, self.field.rank(g) as u64))
            .filter(|(_, r)| *r > 0)
            .collect();
        GradedCharacter { coeffs }
    }
}

pub fn verma_build(n: usize, p: u64, c: u64, tau: &Partition) -> Result<VermaModule> {
    VermaModule::build(n, p, c, tau)
}

pub fn contravariant_gram(m: &VermaModule, d: usize) -> Vec<Vec<u64>> {
    m.contravariant_gram(d)
}

pub fn simple_character(n: usize, p: u64, c: u64, tau: &Partition) -> Result<GradedCharacter> {
    Ok(VermaModule::build(n, p, c, tau)?.simple_character())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn degree_one_module() {
        for p in [3u64, 5, 7] {
            let m = verma_build(1, p, 0, &part(&[1])).unwrap();
            assert_eq!(m.dim(), p as usize);
            assert_eq!(m.monomials(), (0..p as u16).map(|e| vec![e]).collect::<Vec<_>>());
            let l = m.simple_character();
            assert_eq!(l.coeffs, (0..p as i64).map(|d| (d, 1)).collect());
        }
    }

    #[test]
    fn gram_in_low_degree() {
        let m = verma_build(2, 5, 0, &part(&[2])).unwrap();
        assert_eq!(m.contravariant_gram(0), vec![vec![1]]);
        // at c = 0 the y_i are partial derivatives, so B(x_i, x_j) = δ_ij
        assert_eq!(m.contravariant_gram(1), Fp::identity(2));
    }

    #[test]
    fn wrong_size_tau_is_rejected() {
        assert!(matches!(verma_build(2, 5, 0, &part(&[2, 1])), Err(Error::DegreeMismatch { .. })));
    }
}
