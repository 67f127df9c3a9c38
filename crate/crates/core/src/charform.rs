//! The bigraded character pipeline for simple spherical modules in characteristic `p`.
//!
//! The ingredients are functions on `Pi_n`:
//!
//! - `f_c(mu) = (qt)^(-p/2) (prod_{(r,s) in mu} t^r q^s)^c~ w^(p)(mu) / w(mu)`
//! - the kernel `K(lam, mu) = K~_{lam,mu}(q^p, t^p) / w^(p)(mu)` and its convolution operator
//! - `W_0 = K^-1(sfp)`, and `W_c = f_c / W_0^top`
//!
//! `X_lam(mu) = (K c_lam)(mu) f_c(mu) / W_0^top(mu)` and the character is
//! `sum_mu X_lam(mu)`. It is compared against the localization sum of
//! `W_c * BKR^-1(s_lam)` on the Frobenius twist.
//!
//! The kernel is never inverted directly. Since `K = K~^(p) diag(1/w^(p))`,
//! `K^-1 = diag(w^(p)) (K~^-1)^(p)`, and `K~^-1` is cached per `n`.

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactqt::{is_prime_u64, BigRat, Limit, RatQT};
use crate::hilbk::{
    bkr_inverse_class_with, box_monomial, euler_characteristic_with, frobenius_line_bundle_class,
    frobenius_skyscraper, weight, FixedPointClass, Weights,
};
use crate::linalg::{self, Matrix};
use crate::macdonald::{kostka_inverse, kostka_table};
use crate::partitions::{Partition, PartitionIndex};
use crate::pfun::PartitionFunction;
use crate::symfunc::{f_inverse_matrix, sfp};

/// The prime, the parameter `c = c_num / c_den`, and an integer lift of `c` mod `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularParams {
    pub p: u64,
    pub c_num: i64,
    pub c_den: i64,
    pub c_lift: i64,
    /// True when the lift was not given and was defaulted.
    pub lift_defaulted: bool,
}

impl ModularParams {
    /// Validate `p` and `c`, defaulting the lift to the least nonnegative residue.
    pub fn new(p: u64, c_num: i64, c_den: i64, lift: Option<i64>) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        if p == 2 {
            return Err(Error::InvalidParameter("p must be odd".into()));
        }
        if c_den <= 0 {
            return Err(Error::InvalidParameter(format!("denominator {c_den} must be positive")));
        }
        if (c_den as u64).is_multiple_of(p) {
            return Err(Error::InvalidParameter(format!("denominator {c_den} is not invertible mod {p}")));
        }
        let residue = c_mod_p(c_num, c_den, p);
        let (c_lift, lift_defaulted) = match lift {
            Some(l) => {
                if l.rem_euclid(p as i64) as u64 != residue {
                    return Err(Error::InvalidParameter(format!(
                        "lift {l} is not congruent to {c_num}/{c_den} mod {p}"
                    )));
                }
                (l, false)
            }
            None => (residue as i64, true),
        };
        Ok(ModularParams {
            p,
            c_num,
            c_den,
            c_lift,
            lift_defaulted,
        })
    }

    /// Require `p > n`.
    pub fn check_n(&self, n: usize) -> Result<()> {
        if self.p <= n as u64 {
            return Err(Error::PrimeTooSmall { p: self.p, n });
        }
        Ok(())
    }

    pub fn c(&self) -> BigRat {
        BigRat::new(self.c_num.into(), self.c_den.into())
    }

    /// `c` as an element of `F_p`.
    pub fn c_mod_p(&self) -> u64 {
        c_mod_p(self.c_num, self.c_den, self.p)
    }

    /// Membership in `{c >= 0, c not in 1/2 + Z}`.
    pub fn in_q_good(&self) -> bool {
        let c = self.c();
        let two_c = &c * BigRat::from_integer(2.into());
        let half_odd = two_c.is_integer() && two_c.to_integer().is_odd();
        c >= BigRat::from_integer(0.into()) && !half_odd
    }

    pub fn warnings(&self) -> Vec<String> {
        let mut w = Vec::new();
        if !self.in_q_good() {
            w.push(format!(
                "c = {} lies outside the good set (c >= 0, c not a half-odd integer); the character formula is not asserted there",
                self.c()
            ));
        }
        if self.lift_defaulted {
            w.push(format!("lift defaulted to the least nonnegative residue {}", self.c_lift));
        }
        w
    }
}

fn c_mod_p(a: i64, b: i64, p: u64) -> u64 {
    let pm = BigInt::from(p);
    let a = BigInt::from(a).mod_floor(&pm);
    let b = BigInt::from(b).mod_floor(&pm);
    let binv = b.modpow(&(&pm - 2u32), &pm);
    let r = (a * binv).mod_floor(&pm);
    u64::try_from(r).expect("residue below p")
}

/// `c^p - c` in `F_p`.
pub fn artin_schreier(c: u64, p: u64) -> u64 {
    let pm = BigInt::from(p);
    let c = BigInt::from(c) % &pm;
    let r = (c.modpow(&pm, &pm) - &c).mod_floor(&pm);
    u64::try_from(r).expect("residue below p")
}

/// `(qt)^(-p/2) (box monomial)^c~ w^(p)(mu)/w(mu)`.
pub fn f_c(params: &ModularParams, n: usize) -> Result<PartitionFunction> {
    params.check_n(n)?;
    let half = RatQT::qt_half_power(-(params.p as i64));
    Ok(PartitionFunction::from_fn(n, |mu| {
        &(&half * &box_monomial(mu).pow(params.c_lift)) * &frobenius_skyscraper(mu, params.p)
    }))
}

/// The kernel `K(lam, mu)` together with its inverse matrix.
#[derive(Clone, Debug)]
pub struct Kernel {
    pub n: usize,
    pub p: u64,
    index: PartitionIndex,
    entries: Matrix<RatQT>,
    inverse: Matrix<RatQT>,
}

pub fn kernel_k(n: usize, p: u64) -> Result<Kernel> {
    let table = kostka_table(n)?;
    let inv = kostka_inverse(n)?;
    let index = PartitionIndex::new(n);
    let e = p as i64;
    let wp: Vec<RatQT> = index.list().iter().map(|mu| weight(mu, Weights::Frobenius(p))).collect();
    let entries: Matrix<RatQT> = index
        .list()
        .par_iter()
        .map(|lam| {
            index
                .list()
                .iter()
                .zip(&wp)
                .map(|(mu, w)| {
                    RatQT::from_laurent(table.get(lam, mu).substitute(e, e))
                        .checked_div(w)
                        .expect("weights are nonzero")
                })
                .collect()
        })
        .collect();
    let inverse: Matrix<RatQT> = inv
        .par_iter()
        .zip(wp.par_iter())
        .map(|(row, w)| row.iter().map(|x| w * &x.substitute(e, e)).collect())
        .collect();
    Ok(Kernel {
        n,
        p,
        index,
        entries,
        inverse,
    })
}

impl Kernel {
    pub fn partitions(&self) -> &[Partition] {
        self.index.list()
    }

    pub fn get(&self, lam: &Partition, mu: &Partition) -> &RatQT {
        let i = self.index.index(lam).expect("partition of size n");
        let j = self.index.index(mu).expect("partition of size n");
        &self.entries[i][j]
    }

    pub fn matrix(&self) -> &Matrix<RatQT> {
        &self.entries
    }

    pub fn inverse_matrix(&self) -> &Matrix<RatQT> {
        &self.inverse
    }

    fn check(&self, f: &PartitionFunction) -> Result<()> {
        if f.n() != self.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: f.n(),
            });
        }
        Ok(())
    }
}

fn apply_matrix(m: &Matrix<RatQT>, f: &PartitionFunction) -> PartitionFunction {
    let v = linalg::mat_vec(m, f.values());
    PartitionFunction::new(f.n(), v).expect("square matrix over Pi_n")
}

/// `(K f)(lam) = sum_mu K(lam, mu) f(mu)`.
pub fn apply_k(k: &Kernel, f: &PartitionFunction) -> Result<PartitionFunction> {
    k.check(f)?;
    Ok(apply_matrix(&k.entries, f))
}

/// `f -> sum_lam K(lam, mu) f(lam)`, the kernel summed over its first index.
pub fn apply_k_transpose(k: &Kernel, f: &PartitionFunction) -> Result<PartitionFunction> {
    k.check(f)?;
    Ok(apply_matrix(&linalg::transpose(&k.entries), f))
}

pub fn apply_k_inverse(k: &Kernel, f: &PartitionFunction) -> Result<PartitionFunction> {
    k.check(f)?;
    Ok(apply_matrix(&k.inverse, f))
}

/// `K^-1 f` by Gauss-Jordan elimination on the kernel itself.
pub fn solve_k(k: &Kernel, f: &PartitionFunction) -> Result<PartitionFunction> {
    k.check(f)?;
    let b: Matrix<RatQT> = f.values().iter().map(|x| vec![x.clone()]).collect();
    let x = linalg::solve(&k.entries, &b)?;
    PartitionFunction::new(f.n(), x.into_iter().map(|mut r| r.remove(0)).collect())
}

/// `iota_mu^*[W_0] = K^-1(sfp)`.
pub fn splitting_class_w0(n: usize, p: u64) -> Result<FixedPointClass> {
    let k = kernel_k(n, p)?;
    apply_k_inverse(&k, &sfp(n))
}

/// `iota_mu^*[W_c] = (qt)^(-p/2) iota_mu^*[Fr_* O(c)] / W_0^top(mu)`.
///
/// The factor `(qt)^(-p/2)` is the normalization under which this agrees with
/// [`splitting_class_wc_from_fc`].
pub fn splitting_class_wc(params: &ModularParams, n: usize) -> Result<FixedPointClass> {
    params.check_n(n)?;
    let w0 = splitting_class_w0(n, params.p)?;
    let fr = frobenius_line_bundle_class(params.c_lift, params.p, n);
    let half = RatQT::qt_half_power(-(params.p as i64));
    divide_by_top(&fr.map(|_, v| v * &half), &w0)
}

/// `f_c(mu) / W_0^top(mu)`.
pub fn splitting_class_wc_from_fc(params: &ModularParams, n: usize) -> Result<FixedPointClass> {
    let w0 = splitting_class_w0(n, params.p)?;
    divide_by_top(&f_c(params, n)?, &w0)
}

fn divide_by_top(num: &PartitionFunction, w0: &PartitionFunction) -> Result<PartitionFunction> {
    let vals = num
        .iter()
        .map(|(mu, v)| {
            v.checked_div(&w0[mu].top())
                .map_err(|_| Error::Pole(format!("W_0 vanishes at {mu}")))
        })
        .collect::<Result<Vec<_>>>()?;
    PartitionFunction::new(num.n(), vals)
}

/// How the kernel is contracted with `c_lam` in `X_lam`.
///
/// The localization sum over the Frobenius twist produces `sum_nu K(nu, mu)
/// c_{nu,lam}`, summing the kernel over its first index. That is the default.
/// The row contraction `sum_nu K(mu, nu) c_{nu,lam}` is kept for comparison; it
/// does not match the localization sum and has a pole at `q = t = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Contraction {
    #[default]
    Columns,
    Rows,
}

impl Contraction {
    pub fn name(self) -> &'static str {
        match self {
            Contraction::Columns => "columns",
            Contraction::Rows => "rows",
        }
    }
}

/// Everything computed for one `lam`.
#[derive(Clone, Debug)]
pub struct CharacterReport {
    pub lambda: Partition,
    pub x: PartitionFunction,
    pub character: RatQT,
    /// `R Gamma[W_c * BKR^-1(s_lam)]` on the Frobenius twist.
    pub localization: RatQT,
    pub dim_limit: Limit,
    pub warnings: Vec<String>,
}

impl CharacterReport {
    pub fn routes_agree(&self) -> bool {
        self.character == self.localization
    }

    /// Whether the character is a Laurent polynomial with integral exponents.
    pub fn is_integral_laurent(&self) -> bool {
        self.character.is_laurent() && self.character.has_integer_exponents()
    }
}

/// Shared per-`(n, p, c~)` data.
pub struct Pipeline {
    pub params: ModularParams,
    pub n: usize,
    pub kernel: Kernel,
    pub fc: PartitionFunction,
    pub w0: PartitionFunction,
    pub wc: PartitionFunction,
}

impl Pipeline {
    pub fn new(params: &ModularParams, n: usize) -> Result<Self> {
        params.check_n(n)?;
        let kernel = kernel_k(n, params.p)?;
        let fc = f_c(params, n)?;
        let w0 = apply_k_inverse(&kernel, &sfp(n))?;
        let wc = divide_by_top(&fc, &w0)?;
        Ok(Pipeline {
            params: params.clone(),
            n,
            kernel,
            fc,
            w0,
            wc,
        })
    }

    /// `X_lam(mu) = (K c_lam)(mu) W_c(mu)`.
    pub fn x(&self, lam: &Partition, how: Contraction) -> Result<PartitionFunction> {
        let c = f_inverse_matrix(self.n).column(lam);
        let kc = match how {
            Contraction::Rows => apply_k(&self.kernel, &c)?,
            Contraction::Columns => apply_k_transpose(&self.kernel, &c)?,
        };
        Ok(kc.mul(&self.wc))
    }

    /// The localization sum with Frobenius-twisted Procesi data and weights.
    pub fn localization(&self, lam: &Partition) -> Result<RatQT> {
        let bkr = bkr_inverse_class_with(lam, Weights::Frobenius(self.params.p))?;
        Ok(euler_characteristic_with(&self.wc.mul(&bkr), Weights::Frobenius(self.params.p)))
    }

    pub fn character(&self, lam: &Partition, how: Contraction) -> Result<CharacterReport> {
        if lam.n() != self.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: lam.n(),
            });
        }
        let x = self.x(lam, how)?;
        let character = x.sum();
        let localization = self.localization(lam)?;
        let mut warnings = self.params.warnings();
        if !(character.is_laurent() && character.has_integer_exponents()) {
            warnings.push("character is not a Laurent polynomial in q, t".into());
        }
        Ok(CharacterReport {
            lambda: lam.clone(),
            dim_limit: character.limit_at_one(),
            x,
            character,
            localization,
            warnings,
        })
    }
}

/// The character of `L_lam` for the given parameters, default contraction.
pub fn character(params: &ModularParams, lam: &Partition) -> Result<CharacterReport> {
    Pipeline::new(params, lam.n())?.character(lam, Contraction::default())
}

#[cfg(test)]
mod tests;
