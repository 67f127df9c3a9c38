//! Degree-`n` symmetric functions with coefficients in `Q(q,t)`.
//!
//! Every basis is related to the Schur basis by a rational transition matrix
//! built once per `n` from the character table and the Kostka numbers:
//!
//! - `p_rho = sum_lam chi^lam(rho) s_lam`
//! - `h_mu = sum_lam K_{lam,mu} s_lam`
//! - `e_mu = sum_lam K_{lam',mu} s_lam`
//! - `m_mu = sum_lam (K^-1)_{mu,lam} s_lam`
//!
//! The Kronecker product is pointwise on `p_rho / z_rho`: `p_rho * p_sigma =
//! delta z_rho p_rho`. Consequently `F = phi(h_n) * -` is diagonal on power
//! sums with eigenvalue `prod_i 1/((1-t^rho_i)(1-q^rho_i))`, which gives the
//! Schur matrix of `F^-1` in closed form with polynomial entries.

pub mod chartable;

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::cache::PerN;
use crate::error::{Error, Result};
use crate::exactqt::text::parse_ratqt;
use crate::exactqt::{BigRat, RatQT};
use crate::linalg::{self, Matrix};
use crate::partitions::{Partition, PartitionIndex};
use crate::pfun::PartitionFunction;

pub use chartable::{character, kostka_number};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Power,
    Homogeneous,
    Elementary,
    Monomial,
    Schur,
}

impl Basis {
    pub const ALL: [Basis; 5] = [
        Basis::Power,
        Basis::Homogeneous,
        Basis::Elementary,
        Basis::Monomial,
        Basis::Schur,
    ];

    fn slot(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Basis::Power => "power",
            Basis::Homogeneous => "homogeneous",
            Basis::Elementary => "elementary",
            Basis::Monomial => "monomial",
            Basis::Schur => "schur",
        }
    }
}

/// Transition data for one degree.
#[derive(Debug)]
pub struct Tables {
    pub index: PartitionIndex,
    /// `chi[lam][rho]`.
    pub chi: Vec<Vec<i64>>,
    /// `z[rho]`.
    pub z: Vec<BigRat>,
    /// `to_schur[b][mu][lam]`: coefficient of `s_lam` in `b_mu`.
    to_schur: Vec<Matrix<BigRat>>,
    /// `from_schur[b][lam][mu]`: coefficient of `b_mu` in `s_lam`.
    from_schur: Vec<Matrix<BigRat>>,
}

static TABLES: PerN<Tables> = PerN::new();

/// Character table and transition matrices for degree `n`, built once.
pub fn tables(n: usize) -> Arc<Tables> {
    TABLES.get_or(n, || build_tables(n))
}

fn build_tables(n: usize) -> Tables {
    let index = PartitionIndex::new(n);
    let parts = index.list();
    let k = parts.len();
    let chi: Vec<Vec<i64>> = parts
        .iter()
        .map(|l| parts.iter().map(|r| character(l, r)).collect())
        .collect();
    let z: Vec<BigRat> = parts
        .iter()
        .map(|r| BigRat::from_integer(r.z().into()))
        .collect();
    let int = |v: i64| BigRat::from_integer(v.into());
    // kos[lam][mu] = K_{lam, mu}
    let kos: Matrix<BigRat> = parts
        .iter()
        .map(|l| parts.iter().map(|m| int(kostka_number(l, m) as i64)).collect())
        .collect();
    let conj: Vec<usize> = parts
        .iter()
        .map(|l| index.index(&l.conjugate()).expect("conjugate has the same size"))
        .collect();
    let kos_inv = linalg::inverse(&kos).expect("Kostka matrix is unitriangular");

    let power: Matrix<BigRat> = (0..k).map(|r| (0..k).map(|l| int(chi[l][r])).collect()).collect();
    let homogeneous: Matrix<BigRat> = (0..k).map(|m| (0..k).map(|l| kos[l][m].clone()).collect()).collect();
    let elementary: Matrix<BigRat> = (0..k)
        .map(|m| (0..k).map(|l| kos[conj[l]][m].clone()).collect())
        .collect();
    let monomial = kos_inv;
    let schur = linalg::identity::<BigRat>(k);

    let to_schur = vec![power, homogeneous, elementary, monomial, schur];
    let from_schur = to_schur
        .iter()
        .map(|m| linalg::inverse(m).expect("transition matrices are invertible"))
        .collect();
    Tables {
        index,
        chi,
        z,
        to_schur,
        from_schur,
    }
}

/// `prod_i 1/((1 - t^rho_i)(1 - q^rho_i))`.
pub fn phi_eigenvalue(rho: &Partition) -> RatQT {
    phi_denominator(rho).inv().expect("nonzero product")
}

/// `prod_i (1 - t^rho_i)(1 - q^rho_i)`.
pub fn phi_denominator(rho: &Partition) -> RatQT {
    rho.parts()
        .iter()
        .map(|&r| {
            let r = r as i64;
            &RatQT::one_minus(0, r) * &RatQT::one_minus(r, 0)
        })
        .product()
}

/// An element of `Lambda_n`, expanded in one basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    n: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, RatQT>,
}

impl SymFunc {
    pub fn zero(n: usize, basis: Basis) -> Self {
        SymFunc {
            n,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    /// The basis element `b_lam`.
    pub fn basis_element(basis: Basis, lam: &Partition) -> Self {
        let mut f = Self::zero(lam.n(), basis);
        f.coeffs.insert(lam.clone(), RatQT::one());
        f
    }

    pub fn schur(lam: &Partition) -> Self {
        Self::basis_element(Basis::Schur, lam)
    }

    pub fn power(rho: &Partition) -> Self {
        Self::basis_element(Basis::Power, rho)
    }

    /// `h_n` as the basis element `h_(n)`.
    pub fn complete(n: usize) -> Self {
        Self::basis_element(Basis::Homogeneous, &row(n))
    }

    pub fn from_coeffs(
        n: usize,
        basis: Basis,
        coeffs: impl IntoIterator<Item = (Partition, RatQT)>,
    ) -> Result<Self> {
        let mut f = Self::zero(n, basis);
        for (lam, c) in coeffs {
            if lam.n() != n {
                return Err(Error::DegreeMismatch {
                    left: n,
                    right: lam.n(),
                });
            }
            f.add_coeff(lam, c);
        }
        Ok(f)
    }

    fn add_coeff(&mut self, lam: Partition, c: RatQT) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(lam) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, RatQT> {
        &self.coeffs
    }

    pub fn coeff(&self, lam: &Partition) -> RatQT {
        self.coeffs.get(lam).cloned().unwrap_or_else(RatQT::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &RatQT) -> Self {
        let mut f = Self::zero(self.n, self.basis);
        for (lam, v) in &self.coeffs {
            f.add_coeff(lam.clone(), v * c);
        }
        f
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_degree(self, other)?;
        let other = other.convert_basis(self.basis);
        let mut f = self.clone();
        for (lam, v) in other.coeffs {
            f.add_coeff(lam, v);
        }
        Ok(f)
    }

    /// Dense coefficient vector in partition order.
    fn dense(&self, tabs: &Tables) -> Vec<RatQT> {
        let mut v = vec![RatQT::zero(); tabs.index.len()];
        for (lam, c) in &self.coeffs {
            v[tabs.index.index(lam).expect("index partition has size n")] = c.clone();
        }
        v
    }

    fn from_dense(n: usize, basis: Basis, tabs: &Tables, v: Vec<RatQT>) -> Self {
        let mut f = Self::zero(n, basis);
        for (lam, c) in tabs.index.list().iter().zip(v) {
            f.add_coeff(lam.clone(), c);
        }
        f
    }

    /// Re-express in `target`; exact and mutually inverse across bases.
    pub fn convert_basis(&self, target: Basis) -> Self {
        if target == self.basis {
            return self.clone();
        }
        let tabs = tables(self.n);
        let k = tabs.index.len();
        let src = self.dense(&tabs);
        let into = &tabs.to_schur[self.basis.slot()];
        let mut schur = vec![RatQT::zero(); k];
        for (mu, a) in src.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (lam, m) in into[mu].iter().enumerate().filter(|(_, m)| !m.is_zero()) {
                schur[lam] = &schur[lam] + &a.scale(m);
            }
        }
        let out = &tabs.from_schur[target.slot()];
        let mut res = vec![RatQT::zero(); k];
        for (lam, a) in schur.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (mu, m) in out[lam].iter().enumerate().filter(|(_, m)| !m.is_zero()) {
                res[mu] = &res[mu] + &a.scale(m);
            }
        }
        Self::from_dense(self.n, target, &tabs, res)
    }
}

fn row(n: usize) -> Partition {
    if n == 0 {
        Partition::empty()
    } else {
        Partition::new(vec![n]).expect("valid row")
    }
}

fn check_degree(f: &SymFunc, g: &SymFunc) -> Result<()> {
    if f.n != g.n {
        return Err(Error::DegreeMismatch {
            left: f.n,
            right: g.n,
        });
    }
    Ok(())
}

/// The Hall scalar product, computed in the power-sum basis.
pub fn hall(f: &SymFunc, g: &SymFunc) -> Result<RatQT> {
    check_degree(f, g)?;
    let tabs = tables(f.n);
    let a = f.convert_basis(Basis::Power).dense(&tabs);
    let b = g.convert_basis(Basis::Power).dense(&tabs);
    Ok(a.iter()
        .zip(&b)
        .zip(&tabs.z)
        .filter(|((x, y), _)| !x.is_zero() && !y.is_zero())
        .map(|((x, y), z)| (x * y).scale(z))
        .sum())
}

/// The Kronecker (internal) product, returned in the Schur basis.
pub fn kronecker(f: &SymFunc, g: &SymFunc) -> Result<SymFunc> {
    check_degree(f, g)?;
    let tabs = tables(f.n);
    let a = f.convert_basis(Basis::Power).dense(&tabs);
    let b = g.convert_basis(Basis::Power).dense(&tabs);
    let prod = a
        .iter()
        .zip(&b)
        .zip(&tabs.z)
        .map(|((x, y), z)| (x * y).scale(z))
        .collect();
    Ok(SymFunc::from_dense(f.n, Basis::Power, &tabs, prod).convert_basis(Basis::Schur))
}

/// The ring map `p_k -> p_k / ((1 - t^k)(1 - q^k))`, returned in the power-sum basis.
pub fn phi(f: &SymFunc) -> SymFunc {
    let p = f.convert_basis(Basis::Power);
    let mut out = SymFunc::zero(f.n, Basis::Power);
    for (rho, c) in &p.coeffs {
        out.add_coeff(rho.clone(), c * &phi_eigenvalue(rho));
    }
    out
}

/// `F(f) = phi(h_n) * f` (Kronecker product), in the Schur basis.
pub fn f_map(f: &SymFunc) -> SymFunc {
    kronecker(&phi(&SymFunc::complete(f.n)), f).expect("same degree")
}

/// Schur matrix of `F`: `m[lam][mu]` is the coefficient of `s_lam` in `F(s_mu)`.
pub fn f_matrix(n: usize) -> Matrix<RatQT> {
    let tabs = tables(n);
    let parts = tabs.index.list();
    let cols: Vec<SymFunc> = parts.iter().map(|mu| f_map(&SymFunc::schur(mu))).collect();
    parts
        .iter()
        .map(|lam| cols.iter().map(|c| c.coeff(lam)).collect())
        .collect()
}

/// The coefficients `c_{mu,lam}` with `F^-1(s_lam) = sum_mu c_{mu,lam} s_mu`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FInverseMatrix {
    n: usize,
    index: PartitionIndex,
    entries: Matrix<RatQT>,
}

impl FInverseMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        self.index.list()
    }

    /// `c_{mu,lam}`.
    pub fn get(&self, mu: &Partition, lam: &Partition) -> &RatQT {
        let i = self.index.index(mu).expect("partition of size n");
        let j = self.index.index(lam).expect("partition of size n");
        &self.entries[i][j]
    }

    /// Rows indexed by `mu`, columns by `lam`.
    pub fn matrix(&self) -> &Matrix<RatQT> {
        &self.entries
    }

    /// The column `c_lam` as a function of `mu`.
    pub fn column(&self, lam: &Partition) -> PartitionFunction {
        PartitionFunction::from_fn(self.n, |mu| self.get(mu, lam).clone())
    }
}

static F_INVERSE: PerN<FInverseMatrix> = PerN::new();

/// The Schur matrix of `F^-1`, cached per `n`.
///
/// Uses the power-sum eigenbasis: `c_{mu,lam} = sum_rho chi^mu(rho) chi^lam(rho)
/// / z_rho * prod_i (1-t^rho_i)(1-q^rho_i)`.
pub fn f_inverse_matrix(n: usize) -> Arc<FInverseMatrix> {
    F_INVERSE.get_or(n, || {
        let tabs = tables(n);
        let parts = tabs.index.list();
        let k = parts.len();
        let dens: Vec<RatQT> = parts.iter().map(phi_denominator).collect();
        let entries = (0..k)
            .map(|mu| {
                (0..k)
                    .map(|lam| {
                        (0..k)
                            .filter(|&r| tabs.chi[mu][r] != 0 && tabs.chi[lam][r] != 0)
                            .map(|r| {
                                let w = BigRat::from_integer((tabs.chi[mu][r] * tabs.chi[lam][r]).into())
                                    / &tabs.z[r];
                                dens[r].scale(&w)
                            })
                            .sum()
                    })
                    .collect()
            })
            .collect();
        FInverseMatrix {
            n,
            index: tabs.index.clone(),
            entries,
        }
    })
}

/// `sfp(lam) = <s_lam, phi(h_n)>`.
pub fn sfp(n: usize) -> PartitionFunction {
    let ph = phi(&SymFunc::complete(n));
    PartitionFunction::from_fn(n, |lam| hall(&SymFunc::schur(lam), &ph).expect("same degree"))
}

/// `{"basis": "schur", "n": 2, "coeffs": {"[2]": "...", ...}}`.
impl Serialize for SymFunc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs: BTreeMap<String, String> = self
            .coeffs
            .iter()
            .map(|(l, c)| (l.key(), c.to_string()))
            .collect();
        let mut st = s.serialize_struct("SymFunc", 3)?;
        st.serialize_field("basis", &self.basis)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            basis: Basis,
            n: usize,
            coeffs: BTreeMap<String, String>,
        }
        let raw = Raw::deserialize(d)?;
        let mut pairs = Vec::new();
        for (k, v) in raw.coeffs {
            let lam: Partition = k.parse().map_err(serde::de::Error::custom)?;
            pairs.push((lam, parse_ratqt(&v).map_err(serde::de::Error::custom)?));
        }
        SymFunc::from_coeffs(raw.n, raw.basis, pairs).map_err(serde::de::Error::custom)
    }
}

/// `F` and `c` multiply to the identity.
pub fn check_f_inverse(n: usize) -> bool {
    let f = f_matrix(n);
    let c = f_inverse_matrix(n);
    linalg::mat_mul(&f, c.matrix()) == linalg::identity(f.len())
}

#[cfg(test)]
mod tests;
