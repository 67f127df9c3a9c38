use super::*;
use crate::linalg::is_generically_invertible;
use crate::partitions::partitions_of;
use proptest::prelude::*;

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn half() -> BigRat {
    BigRat::new(1.into(), 2.into())
}

fn rq(c: i64) -> RatQT {
    RatQT::from_int(c)
}

#[test]
fn newton_and_jacobi_trudi_examples() {
    let s2 = SymFunc::schur(&p(&[2])).convert_basis(Basis::Power);
    let expect = SymFunc::from_coeffs(
        2,
        Basis::Power,
        [(p(&[2]), RatQT::from_rat(half())), (p(&[1, 1]), RatQT::from_rat(half()))],
    )
    .unwrap();
    assert_eq!(s2, expect);
    let h2 = SymFunc::basis_element(Basis::Homogeneous, &p(&[2])).convert_basis(Basis::Schur);
    assert_eq!(h2, SymFunc::schur(&p(&[2])));
    let e2 = SymFunc::basis_element(Basis::Elementary, &p(&[2])).convert_basis(Basis::Schur);
    assert_eq!(e2, SymFunc::schur(&p(&[1, 1])));
    // m_(1,1) = e_2 and m_(2) = p_2
    let m11 = SymFunc::basis_element(Basis::Monomial, &p(&[1, 1])).convert_basis(Basis::Elementary);
    assert_eq!(m11, SymFunc::basis_element(Basis::Elementary, &p(&[2])));
    let m2 = SymFunc::basis_element(Basis::Monomial, &p(&[2])).convert_basis(Basis::Power);
    assert_eq!(m2, SymFunc::power(&p(&[2])));
}

#[test]
fn conversions_roundtrip_up_to_degree_8() {
    for n in 1..=8 {
        for lam in partitions_of(n) {
            for from in Basis::ALL {
                let f = SymFunc::basis_element(from, &lam);
                for to in Basis::ALL {
                    assert_eq!(f.convert_basis(to).convert_basis(from), f, "{lam} {from:?}->{to:?}");
                }
            }
        }
    }
}

#[test]
fn hall_examples_and_gram() {
    let s21 = SymFunc::schur(&p(&[2, 1]));
    assert_eq!(hall(&s21, &s21).unwrap(), rq(1));
    let p2 = SymFunc::power(&p(&[2]));
    assert_eq!(hall(&p2, &p2).unwrap(), rq(2));
    assert_eq!(hall(&SymFunc::schur(&p(&[2])), &SymFunc::schur(&p(&[1, 1]))).unwrap(), rq(0));
    assert!(matches!(
        hall(&s21, &p2),
        Err(Error::DegreeMismatch { left: 3, right: 2 })
    ));
    for n in 1..=5 {
        let parts = partitions_of(n);
        for a in &parts {
            for b in &parts {
                let g = hall(&SymFunc::schur(a), &SymFunc::schur(b)).unwrap();
                assert_eq!(g, rq((a == b) as i64));
                let z = hall(&SymFunc::power(a), &SymFunc::power(b)).unwrap();
                assert_eq!(z, rq(if a == b { a.z() as i64 } else { 0 }));
            }
        }
    }
}

/// Characters of the S_3 irreducibles read off their definitions: trivial,
/// sign, and the standard representation (fixed points minus one).
fn s3_brute_character(lam: &Partition, perm: &[usize]) -> i64 {
    let fixed = (0..3).filter(|&i| perm[i] == i).count() as i64;
    let mut inversions = 0;
    for i in 0..3 {
        for j in i + 1..3 {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    let sign = if inversions % 2 == 0 { 1 } else { -1 };
    match lam.parts() {
        [3] => 1,
        [1, 1, 1] => sign,
        [2, 1] => fixed - 1,
        _ => unreachable!(),
    }
}

#[test]
fn kronecker_matches_s3_brute_force() {
    let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let parts = partitions_of(3);
    for a in &parts {
        for b in &parts {
            let prod = kronecker(&SymFunc::schur(a), &SymFunc::schur(b)).unwrap();
            for c in &parts {
                let g: i64 = perms
                    .iter()
                    .map(|w| s3_brute_character(a, w) * s3_brute_character(b, w) * s3_brute_character(c, w))
                    .sum::<i64>()
                    / 6;
                assert_eq!(prod.coeff(c), rq(g), "{a} x {b} at {c}");
            }
        }
    }
    let s21 = SymFunc::schur(&p(&[2, 1]));
    let expect = SymFunc::from_coeffs(3, Basis::Schur, parts.iter().map(|l| (l.clone(), rq(1)))).unwrap();
    assert_eq!(kronecker(&s21, &s21).unwrap(), expect);
    let sign2 = kronecker(&SymFunc::schur(&p(&[2])), &SymFunc::schur(&p(&[1, 1]))).unwrap();
    assert_eq!(sign2, SymFunc::schur(&p(&[1, 1])));
}

#[test]
fn trivial_is_kronecker_unit() {
    for n in 1..=6 {
        let unit = SymFunc::schur(&p(&[n]));
        for lam in partitions_of(n) {
            let s = SymFunc::schur(&lam);
            assert_eq!(kronecker(&s, &unit).unwrap(), s);
            assert_eq!(kronecker(&unit, &s).unwrap(), s);
        }
    }
}

#[test]
fn phi_examples() {
    let p2 = SymFunc::power(&p(&[2]));
    let d2 = &RatQT::one_minus(0, 2) * &RatQT::one_minus(2, 0);
    assert_eq!(phi(&p2), p2.scale(&d2.inv().unwrap()));
    let p11 = SymFunc::power(&p(&[1, 1]));
    let d1 = &RatQT::one_minus(1, 0) * &RatQT::one_minus(0, 1);
    assert_eq!(phi(&p11), p11.scale(&(&d1 * &d1).inv().unwrap()));
    let h1 = SymFunc::complete(1);
    assert_eq!(phi(&h1), SymFunc::power(&p(&[1])).scale(&d1.inv().unwrap()));
}

#[test]
fn f_map_in_degree_one_and_two() {
    let d1 = &RatQT::one_minus(1, 0) * &RatQT::one_minus(0, 1);
    let f = f_map(&SymFunc::schur(&p(&[1])));
    assert_eq!(f, SymFunc::schur(&p(&[1])).scale(&d1.inv().unwrap()));
    assert_eq!(f_inverse_matrix(1).get(&p(&[1]), &p(&[1])), &d1);
    // coefficient of s_(2) in F(s_(2)) is <s_(2), phi(h_2) * s_(2)>
    let s2 = SymFunc::schur(&p(&[2]));
    let direct = hall(&s2, &kronecker(&phi(&SymFunc::complete(2)), &s2).unwrap()).unwrap();
    assert_eq!(f_map(&s2).coeff(&p(&[2])), direct);
}

#[test]
fn f_inverse_is_inverse() {
    for n in 1..=5 {
        assert!(check_f_inverse(n), "n = {n}");
    }
    for n in 1..=3 {
        let generic = linalg::inverse(&f_matrix(n)).unwrap();
        assert_eq!(&generic, f_inverse_matrix(n).matrix());
    }
}

#[test]
fn f_matrix_invertible_up_to_6() {
    for n in 1..=6 {
        assert!(is_generically_invertible(&f_matrix(n)), "n = {n}");
    }
}

#[test]
fn f_inverse_entries_are_polynomials() {
    for n in 1..=6 {
        let c = f_inverse_matrix(n);
        for row in c.matrix() {
            for x in row {
                assert!(x.is_laurent());
            }
        }
    }
}

#[test]
fn sfp_values() {
    let d1 = &RatQT::one_minus(1, 0) * &RatQT::one_minus(0, 1);
    assert_eq!(sfp(1)[&p(&[1])], d1.inv().unwrap());
    // h_2 = (p_11 + p_2)/2, so <s_2, phi(h_2)> = (phi_11 + phi_2)/2 and
    // <s_11, phi(h_2)> = (phi_11 - phi_2)/2.
    let phi11 = (&d1 * &d1).inv().unwrap();
    let phi2 = (&RatQT::one_minus(2, 0) * &RatQT::one_minus(0, 2)).inv().unwrap();
    let v = sfp(2);
    assert_eq!(v[&p(&[2])], (&phi11 + &phi2).scale(&half()));
    assert_eq!(v[&p(&[1, 1])], (&phi11 - &phi2).scale(&half()));
    for n in 1..=6 {
        assert!(sfp(n).values().iter().all(|x| !x.is_zero()));
    }
}

#[test]
fn json_form() {
    let f = SymFunc::from_coeffs(2, Basis::Schur, [(p(&[2]), rq(1)), (p(&[1, 1]), RatQT::q())]).unwrap();
    let s = serde_json::to_string(&f).unwrap();
    assert_eq!(s, r#"{"basis":"schur","n":2,"coeffs":{"[1,1]":"q","[2]":"1"}}"#);
    let back: SymFunc = serde_json::from_str(&s).unwrap();
    assert_eq!(back, f);
}

fn arb_sym(n: usize) -> impl Strategy<Value = SymFunc> {
    let parts = partitions_of(n);
    let k = parts.len();
    (prop::collection::vec(-3i64..=3, k), prop::sample::select(Basis::ALL.to_vec())).prop_map(
        move |(cs, b)| {
            SymFunc::from_coeffs(n, b, parts.iter().cloned().zip(cs.into_iter().map(RatQT::from_int)))
                .unwrap()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn kronecker_commutative_associative(
        (a, b, c) in (1usize..=4).prop_flat_map(|n| (arb_sym(n), arb_sym(n), arb_sym(n)))
    ) {
        let ab = kronecker(&a, &b).unwrap();
        prop_assert_eq!(&ab, &kronecker(&b, &a).unwrap());
        let left = kronecker(&ab, &c).unwrap();
        let right = kronecker(&a, &kronecker(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn hall_symmetric(
        (a, b) in (1usize..=5).prop_flat_map(|n| (arb_sym(n), arb_sym(n)))
    ) {
        prop_assert_eq!(hall(&a, &b).unwrap(), hall(&b, &a).unwrap());
    }
}
