//! Torus-equivariant K-theory of `Hilb^n(A^2)` through fixed-point restrictions.
//!
//! A class is recorded by its restrictions to the monomial ideals, one per
//! partition. The Euler characteristic is the localization sum
//! `sum_mu F(mu) / w(mu)` with the tangent weight
//! `w(mu) = prod_x (1 - t^{1+l} q^{-a})(1 - t^{-l} q^{1+a})`.
//!
//! On the Frobenius twist every weight is raised to the `p`-th power; that
//! variant is selected by [`Weights::Frobenius`].

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::Result;
use crate::exactqt::RatQT;
use crate::macdonald::kostka_table;
use crate::partitions::{partitions_of, Partition};
use crate::pfun::PartitionFunction;
use crate::symfunc::f_inverse_matrix;

/// Restrictions `(iota_mu^* F)_mu` of an equivariant class.
pub type FixedPointClass = PartitionFunction;

/// Which torus weights the localization formula divides by.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Weights {
    Plain,
    /// Weights of the Frobenius twist: every `q, t` replaced by `q^p, t^p`.
    Frobenius(u64),
}

impl Weights {
    fn exponent(self) -> i64 {
        match self {
            Weights::Plain => 1,
            Weights::Frobenius(p) => p as i64,
        }
    }
}

/// `iota_mu^*(1_mu)`, the product of the tangent weights at `mu`.
pub fn skyscraper_weight(mu: &Partition) -> RatQT {
    weight_with(mu, 1)
}

fn weight_with(mu: &Partition, e: i64) -> RatQT {
    mu.boxes()
        .map(|x| {
            let (a, l) = mu.arm_leg(x);
            let (a, l) = (a as i64, l as i64);
            &RatQT::one_minus(-a * e, (1 + l) * e) * &RatQT::one_minus((1 + a) * e, -l * e)
        })
        .product()
}

pub fn weight(mu: &Partition, w: Weights) -> RatQT {
    weight_with(mu, w.exponent())
}

/// The class `1_mu`: `w(mu)` at `mu` and zero elsewhere.
pub fn skyscraper_class(mu: &Partition) -> FixedPointClass {
    PartitionFunction::delta(mu, skyscraper_weight(mu))
}

/// The structure sheaf: restriction 1 everywhere.
pub fn structure_sheaf(n: usize) -> FixedPointClass {
    PartitionFunction::from_fn(n, |_| RatQT::one())
}

/// `R Gamma[F] = sum_mu F(mu) / w(mu)`.
pub fn euler_characteristic(f: &FixedPointClass) -> RatQT {
    euler_characteristic_with(f, Weights::Plain)
}

pub fn euler_characteristic_with(f: &FixedPointClass, w: Weights) -> RatQT {
    let terms: Vec<RatQT> = f
        .iter()
        .collect::<Vec<_>>()
        .par_iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(mu, v)| v.checked_div(&weight(mu, w)).expect("weights are nonzero"))
        .collect();
    terms.into_iter().sum()
}

/// `iota_mu^*[P_lam] = K~_{lam,mu}` for every `lam`, optionally Frobenius-twisted.
pub fn procesi_restriction_with(n: usize, w: Weights) -> Result<BTreeMap<Partition, FixedPointClass>> {
    let table = kostka_table(n)?;
    let e = w.exponent();
    Ok(partitions_of(n)
        .into_iter()
        .map(|lam| {
            let class = PartitionFunction::from_fn(n, |mu| {
                RatQT::from_laurent(table.get(&lam, mu).substitute(e, e))
            });
            (lam, class)
        })
        .collect())
}

pub fn procesi_restriction(n: usize) -> Result<BTreeMap<Partition, FixedPointClass>> {
    procesi_restriction_with(n, Weights::Plain)
}

/// `iota_mu^*[BKR^-1(s_lam)] = sum_nu c_{nu,lam} K~_{nu,mu}`.
pub fn bkr_inverse_class(lam: &Partition) -> Result<FixedPointClass> {
    bkr_inverse_class_with(lam, Weights::Plain)
}

/// As [`bkr_inverse_class`], with `K~` optionally replaced by its Frobenius twist
/// while `c` stays untwisted.
pub fn bkr_inverse_class_with(lam: &Partition, w: Weights) -> Result<FixedPointClass> {
    let n = lam.n();
    let table = kostka_table(n)?;
    let c = f_inverse_matrix(n);
    let e = w.exponent();
    let parts = partitions_of(n);
    Ok(PartitionFunction::from_fn(n, |mu| {
        parts
            .iter()
            .map(|nu| {
                let k = RatQT::from_laurent(table.get(nu, mu).substitute(e, e));
                c.get(nu, lam) * &k
            })
            .sum()
    }))
}

/// The scalar by which `Fr_*` acts on `1_mu`: `w^(p)(mu) / w(mu)`.
pub fn frobenius_skyscraper(mu: &Partition, p: u64) -> RatQT {
    weight(mu, Weights::Frobenius(p))
        .checked_div(&skyscraper_weight(mu))
        .expect("weights are nonzero")
}

/// `prod_{(r,s) in mu} t^r q^s`.
pub fn box_monomial(mu: &Partition) -> RatQT {
    let (q, t) = mu
        .boxes()
        .fold((0i64, 0i64), |(q, t), x| (q + x.s as i64, t + x.r as i64));
    RatQT::monomial(q, t)
}

/// Values `Fr_*(1_mu)-ratio * (box monomial)^c_lift` at each `mu`.
pub fn frobenius_line_bundle_class(c_lift: i64, p: u64, n: usize) -> FixedPointClass {
    PartitionFunction::from_fn(n, |mu| &frobenius_skyscraper(mu, p) * &box_monomial(mu).pow(c_lift))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactqt::text::parse_ratqt;
    use crate::symfunc::f_matrix;
    use crate::Limit;
    use num_traits::{ToPrimitive, Zero};
    use proptest::prelude::*;
    use std::collections::BTreeMap as Map;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn r(s: &str) -> RatQT {
        parse_ratqt(s).unwrap()
    }

    #[test]
    fn weight_examples() {
        assert_eq!(skyscraper_weight(&p(&[1])), &RatQT::one_minus(0, 1) * &RatQT::one_minus(1, 0));
        let w2 = [
            RatQT::one_minus(0, 1),
            RatQT::one_minus(2, 0),
            RatQT::one_minus(-1, 1),
            RatQT::one_minus(1, 0),
        ]
        .into_iter()
        .product::<RatQT>();
        assert_eq!(skyscraper_weight(&p(&[2])), w2);
        assert_eq!(skyscraper_weight(&p(&[1, 1])), w2.swap_qt());
        for n in 1..=5 {
            for mu in partitions_of(n) {
                assert_eq!(skyscraper_weight(&mu.conjugate()), skyscraper_weight(&mu).swap_qt());
            }
        }
    }

    #[test]
    fn skyscrapers_have_unit_euler_characteristic() {
        for n in 1..=6 {
            for mu in partitions_of(n) {
                assert!(euler_characteristic(&skyscraper_class(&mu)).is_one(), "{mu}");
            }
        }
    }

    /// Bigraded Hilbert series of `Sym^n k[x,y]`, by enumerating multisets of
    /// `n` monomials of total degree at most `max`.
    fn brute_sym_series(n: usize, max: i64) -> Map<(i64, i64), i64> {
        let monos: Vec<(i64, i64)> = (0..=max)
            .flat_map(|d| (0..=d).map(move |a| (a, d - a)))
            .collect();
        let mut out = Map::new();
        fn rec(
            monos: &[(i64, i64)],
            start: usize,
            left: usize,
            acc: (i64, i64),
            max: i64,
            out: &mut Map<(i64, i64), i64>,
        ) {
            if acc.0 + acc.1 > max {
                return;
            }
            if left == 0 {
                *out.entry(acc).or_insert(0) += 1;
                return;
            }
            for i in start..monos.len() {
                let m = monos[i];
                rec(monos, i, left - 1, (acc.0 + m.0, acc.1 + m.1), max, out);
            }
        }
        rec(&monos, 0, n, (0, 0), max, &mut out);
        out
    }

    #[test]
    fn structure_sheaf_matches_symmetric_power() {
        let d1 = &RatQT::one_minus(0, 1) * &RatQT::one_minus(1, 0);
        assert_eq!(euler_characteristic(&structure_sheaf(1)), d1.inv().unwrap());
        for n in 1..=3 {
            let series = euler_characteristic(&structure_sheaf(n)).series(8).unwrap();
            let brute = brute_sym_series(n, 8);
            let ours: Map<(i64, i64), i64> = series
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k, c.to_integer().to_i64().unwrap()))
                .collect();
            assert_eq!(ours, brute, "n = {n}");
        }
    }

    #[test]
    fn procesi_examples() {
        let one = procesi_restriction(1).unwrap();
        assert!(one[&p(&[1])][&p(&[1])].is_one());
        let two = procesi_restriction(2).unwrap();
        assert_eq!(two[&p(&[1, 1])][&p(&[2])], RatQT::q());
        // K~_{(n),mu} = 1, so P_(n) has the Euler characteristic of the structure
        // sheaf, which has a pole on the diagonal.
        for n in 1..=3 {
            let row = &procesi_restriction(n).unwrap()[&p(&[n])];
            let chi = euler_characteristic(row);
            assert_eq!(chi, euler_characteristic(&structure_sheaf(n)));
            assert_eq!(chi.limit_at_one(), Limit::Pole);
        }
        let tw = procesi_restriction_with(2, Weights::Frobenius(5)).unwrap();
        assert_eq!(tw[&p(&[1, 1])][&p(&[2])], RatQT::monomial(5, 0));
    }

    #[test]
    fn bkr_examples() {
        let b = bkr_inverse_class(&p(&[1])).unwrap();
        assert_eq!(b[&p(&[1])], r("1 - q - t + q*t"));
        // Applying F to the lam-index recovers the Procesi restrictions.
        for n in 1..=3 {
            let parts = partitions_of(n);
            let f = f_matrix(n);
            let procesi = procesi_restriction(n).unwrap();
            let bkr: Vec<FixedPointClass> = parts.iter().map(|l| bkr_inverse_class(l).unwrap()).collect();
            for (k, kappa) in parts.iter().enumerate() {
                for mu in &parts {
                    let s: RatQT = (0..parts.len()).map(|l| &bkr[l][mu] * &f[l][k]).sum();
                    assert_eq!(s, procesi[kappa][mu]);
                }
            }
        }
        // n = 2 against the explicit matrix-vector product
        let c = f_inverse_matrix(2);
        let t = kostka_table(2).unwrap();
        let lam = p(&[1, 1]);
        let v = bkr_inverse_class(&lam).unwrap();
        for mu in partitions_of(2) {
            let expect = &(c.get(&p(&[2]), &lam) * &RatQT::from_laurent(t.get(&p(&[2]), &mu).clone()))
                + &(c.get(&p(&[1, 1]), &lam) * &RatQT::from_laurent(t.get(&p(&[1, 1]), &mu).clone()));
            assert_eq!(v[&mu], expect);
        }
    }

    #[test]
    fn frobenius_examples() {
        let ratio = r("(1 - q^5 - t^5 + q^5*t^5)/(1 - q - t + q*t)");
        assert_eq!(frobenius_skyscraper(&p(&[1]), 5), ratio);
        let mu = p(&[2]);
        assert_eq!(
            frobenius_skyscraper(&mu, 5),
            skyscraper_weight(&mu).substitute(5, 5).checked_div(&skyscraper_weight(&mu)).unwrap()
        );
        assert_eq!(frobenius_line_bundle_class(0, 5, 1)[&p(&[1])], ratio);
        assert_eq!(frobenius_line_bundle_class(1, 5, 1)[&p(&[1])], ratio);
        let c0 = frobenius_line_bundle_class(0, 5, 2);
        let c1 = frobenius_line_bundle_class(1, 5, 2);
        assert_eq!(c1[&mu], &c0[&mu] * &RatQT::q());
        assert_eq!(c1[&p(&[1, 1])], &c0[&p(&[1, 1])] * &RatQT::t());
    }

    #[test]
    fn conjugation_symmetry_of_class_data() {
        for n in 1..=4 {
            let procesi = procesi_restriction(n).unwrap();
            for mu in partitions_of(n) {
                for class in procesi.values() {
                    assert_eq!(class[&mu.conjugate()], class[&mu].swap_qt());
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn euler_characteristic_is_linear(
            (n, a, b, x, y) in (1usize..=3).prop_flat_map(|n| {
                let k = partitions_of(n).len();
                (Just(n), prop::collection::vec(-4i64..=4, k), prop::collection::vec(-4i64..=4, k), -3i64..=3, -3i64..=3)
            })
        ) {
            let f = PartitionFunction::new(n, a.into_iter().map(RatQT::from_int).collect()).unwrap();
            let g = PartitionFunction::new(n, b.into_iter().map(RatQT::from_int).collect()).unwrap();
            let (x, y) = (RatQT::from_int(x), RatQT::from_int(y));
            let combo = f.map(|mu, v| &(v * &x) + &(&g[mu] * &y));
            let lhs = euler_characteristic(&combo);
            let rhs = &(&euler_characteristic(&f) * &x) + &(&euler_characteristic(&g) * &y);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
