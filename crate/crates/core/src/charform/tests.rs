use super::*;
use crate::exactqt::text::parse_ratqt;
use crate::hilbk::{procesi_restriction_with, skyscraper_weight};
use crate::partitions::partitions_of;
use proptest::prelude::*;

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn r(s: &str) -> RatQT {
    parse_ratqt(s).unwrap()
}

fn params(p: u64, lift: i64) -> ModularParams {
    ModularParams::new(p, lift, 1, Some(lift)).unwrap()
}

/// `(1 - q^p)(1 - t^p) / ((1 - q)(1 - t))`.
fn frob_ratio(p: i64) -> RatQT {
    (&RatQT::one_minus(p, 0) * &RatQT::one_minus(0, p))
        .checked_div(&(&RatQT::one_minus(1, 0) * &RatQT::one_minus(0, 1)))
        .unwrap()
}

#[test]
fn artin_schreier_vanishes_on_prime_field() {
    assert_eq!(artin_schreier(2, 5), 0);
    assert_eq!(artin_schreier(0, 5), 0);
    for p in [3u64, 5, 7, 11, 13] {
        for c in 0..p {
            assert_eq!(artin_schreier(c, p), 0);
        }
    }
}

#[test]
fn parameter_validation() {
    assert_eq!(ModularParams::new(9, 1, 1, None), Err(Error::NotPrime(9)));
    assert!(ModularParams::new(5, 1, 5, None).is_err());
    assert!(ModularParams::new(5, 1, 1, Some(2)).is_err());
    let half = ModularParams::new(5, 1, 2, None).unwrap();
    assert_eq!(half.c_lift, 3);
    assert_eq!(half.c_mod_p(), 3);
    assert!(!half.in_q_good());
    assert!(!ModularParams::new(5, -1, 1, Some(4)).unwrap().in_q_good());
    let good = ModularParams::new(7, 2, 3, Some(-11)).unwrap();
    assert!(good.in_q_good());
    assert!(good.warnings().is_empty());
    assert_eq!(ModularParams::new(5, 2, 1, None).unwrap().warnings().len(), 1);
    assert_eq!(params(5, 0).check_n(5), Err(Error::PrimeTooSmall { p: 5, n: 5 }));
}

#[test]
fn f_c_examples() {
    let expect = &RatQT::qt_half_power(-5) * &frob_ratio(5);
    assert_eq!(f_c(&params(5, 0), 1).unwrap()[&p(&[1])], expect);
    assert_eq!(f_c(&params(5, 3), 1).unwrap()[&p(&[1])], expect);
    // two boxes (0,0), (0,1): monomial q
    let mu = p(&[2]);
    let w = skyscraper_weight(&mu);
    let direct = (&RatQT::qt_half_power(-5) * &RatQT::q())
        * w.substitute(5, 5).checked_div(&w).unwrap();
    assert_eq!(f_c(&params(5, 1), 2).unwrap()[&mu], direct);
}

#[test]
fn kernel_examples() {
    let k1 = kernel_k(1, 5).unwrap();
    assert_eq!(k1.get(&p(&[1]), &p(&[1])), &r("(1)/(1 - t^5 - q^5 + q^5*t^5)"));
    let k2 = kernel_k(2, 5).unwrap();
    let w = skyscraper_weight(&p(&[2])).substitute(5, 5);
    assert_eq!(k2.get(&p(&[1, 1]), &p(&[2])), &RatQT::monomial(5, 0).checked_div(&w).unwrap());
    for n in 1..=5 {
        assert!(linalg::is_generically_invertible(kernel_k(n, 5).unwrap().matrix()));
    }
}

#[test]
fn kernel_inverse_on_basis_vectors() {
    for pr in [5u64, 7] {
        for n in 1..=4 {
            let k = kernel_k(n, pr).unwrap();
            for mu in partitions_of(n) {
                let e = PartitionFunction::delta(&mu, RatQT::one());
                assert_eq!(apply_k(&k, &apply_k_inverse(&k, &e).unwrap()).unwrap(), e);
                assert_eq!(apply_k_inverse(&k, &apply_k(&k, &e).unwrap()).unwrap(), e);
            }
        }
    }
    for n in 1..=3 {
        let k = kernel_k(n, 5).unwrap();
        let s = sfp(n);
        assert_eq!(solve_k(&k, &s).unwrap(), apply_k_inverse(&k, &s).unwrap());
    }
}

#[test]
fn degree_one_operator_values() {
    let k = kernel_k(1, 5).unwrap();
    let one = p(&[1]);
    assert_eq!(apply_k_inverse(&k, &sfp(1)).unwrap()[&one], frob_ratio(5));
    let c = f_inverse_matrix(1).column(&one);
    assert_eq!(apply_k(&k, &c).unwrap()[&one], frob_ratio(5).inv().unwrap());
    assert_eq!(splitting_class_w0(1, 5).unwrap()[&one], frob_ratio(5));
}

#[test]
fn w0_defining_system() {
    for pr in [5u64, 7] {
        for n in 1..=3 {
            let w0 = splitting_class_w0(n, pr).unwrap();
            let procesi = procesi_restriction_with(n, Weights::Frobenius(pr)).unwrap();
            let s = sfp(n);
            for (lam, class) in &procesi {
                let chi = euler_characteristic_with(&class.mul(&w0), Weights::Frobenius(pr));
                assert_eq!(chi, s[lam], "n = {n}, lam = {lam}");
            }
            for v in w0.values() {
                assert!(matches!(v.limit_at_one(), Limit::Value(_)), "n = {n}");
            }
        }
    }
}

/// Both constructions of `W_c` agree. In degree one the class is a Laurent
/// polynomial; in degree two a denominator survives, which is recorded here as
/// an observed fact rather than hidden.
#[test]
fn wc_routes_agree() {
    for (pr, lift) in [(5u64, 0i64), (5, 1), (7, 2)] {
        for n in 1..=2 {
            let a = splitting_class_wc(&params(pr, lift), n).unwrap();
            let b = splitting_class_wc_from_fc(&params(pr, lift), n).unwrap();
            assert_eq!(a, b);
            let laurent = a.values().iter().all(RatQT::is_laurent);
            assert_eq!(laurent, n == 1, "p = {pr}, n = {n}");
        }
    }
}

#[test]
fn w0_differs_from_frobenius_pushforward_beyond_degree_one() {
    use crate::hilbk::frobenius_skyscraper;
    for n in 1..=2 {
        let w0 = splitting_class_w0(n, 5).unwrap();
        let same = partitions_of(n).iter().all(|mu| w0[mu] == frobenius_skyscraper(mu, 5));
        assert_eq!(same, n == 1);
    }
}

#[test]
fn degree_one_character_regression() {
    let rep = character(&params(5, 0), &p(&[1])).unwrap();
    let expect = &RatQT::qt_half_power(3) * &frob_ratio(5).inv().unwrap();
    assert_eq!(rep.character, expect);
    assert_eq!(rep.x[&p(&[1])], expect);
    assert!(rep.routes_agree());
    assert_eq!(rep.dim_limit, Limit::Value(BigRat::new(1.into(), 25.into())));
}

#[test]
fn two_routes_agree() {
    for (pr, lift) in [(5u64, 0i64), (5, 1), (7, 2)] {
        for n in 1..=2 {
            let pipe = Pipeline::new(&params(pr, lift), n).unwrap();
            for lam in partitions_of(n) {
                let rep = pipe.character(&lam, Contraction::Columns).unwrap();
                assert!(rep.routes_agree(), "p = {pr}, c = {lift}, lam = {lam}");
            }
        }
    }
}

/// The row contraction is the other reading of the convolution; at `n = 2` it
/// disagrees with the localization sum.
#[test]
fn row_contraction_differs() {
    let pipe = Pipeline::new(&params(5, 0), 2).unwrap();
    let rep = pipe.character(&p(&[2]), Contraction::Rows).unwrap();
    assert!(!rep.routes_agree());
    assert_eq!(rep.dim_limit, Limit::Pole);
}

#[test]
fn shifting_the_lift_by_p() {
    let a = Pipeline::new(&params(5, 1), 2).unwrap();
    let b = Pipeline::new(&ModularParams::new(5, 1, 1, Some(6)).unwrap(), 2).unwrap();
    for lam in partitions_of(2) {
        let xa = a.x(&lam, Contraction::Columns).unwrap();
        let xb = b.x(&lam, Contraction::Columns).unwrap();
        for mu in partitions_of(2) {
            assert_eq!(xb[&mu], &xa[&mu] * &box_monomial(&mu).pow(5));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn top_is_multiplicative(i in 0usize..2, j in 0usize..2, pr in prop::sample::select(vec![5u64, 7])) {
        let pipe = Pipeline::new(&params(pr, 1), 2).unwrap();
        let parts = partitions_of(2);
        let f = &pipe.wc[&parts[i]];
        let g = &pipe.w0[&parts[j]];
        prop_assert_eq!((f * g).top(), &f.top() * &g.top());
        prop_assert_eq!(pipe.fc[&parts[i]].top().top(), pipe.fc[&parts[i]].clone());
    }
}

