use super::checks::{dunkl_suite, pbw_graded_dim, pbw_suite};
use super::pcenter::{commutator_vanishes, Candidate, Probe};
use super::poly::monomials_of_degree;
use super::*;
use crate::partitions::Partition;

fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

#[test]
fn small_dunkl_suite_passes() {
    for c in [0u64, 1, 3] {
        let r = dunkl_suite(3, 5, c, 6, 5).unwrap();
        assert!(r.passed, "{:?}", r.checks.iter().find(|x| !x.passed));
    }
}

#[test]
fn small_pbw_suite_passes() {
    let r = pbw_suite(2, 5, 2, 30, 7).unwrap();
    assert!(r.passed, "{:?}", r.checks.iter().find(|x| !x.passed));
}

#[test]
fn graded_pbw_dimensions() {
    assert_eq!(pbw_graded_dim(2, 1, 1), 2 * 2 * 2);
    assert_eq!(pbw_graded_dim(3, 2, 0), 6 * 6);
}

#[test]
fn spherical_projection_examples() {
    let h = CherednikAlgebra::new(2, 5, 2).unwrap();
    let ex1 = h.spherical_project(&h.generator(&h.x(0)));
    let ex2 = h.spherical_project(&h.generator(&h.x(1)));
    assert_eq!(ex1, ex2);
    assert_eq!(h.spherical_project(&h.one()), h.symmetrizer());
}

/// `e (Σ y_i^2) e` acts on symmetric polynomials as `Σ D_i^2`, which in turn
/// is the radial part `H_c`.
#[test]
fn spherical_laplacian_matches_dunkl_laplacian() {
    for (n, p, c) in [(2usize, 7u64, 2u64), (3, 7, 1)] {
        let h = CherednikAlgebra::new(n, p, c).unwrap();
        let mut lap = h.zero();
        for i in 0..n {
            lap = lap.add(&h.normalize(&[h.y(i), h.y(i)]));
        }
        let sph = h.spherical_project(&lap);
        let radial = radial_part(n, h.field, c);
        let ds: Vec<DunklOperator> = (0..n).map(|i| DunklOperator::new(n, h.field, c, i)).collect();
        for d in 0..=6 {
            for m in monomials_of_degree(n, d) {
                let mono = Poly::monomial(n, h.field, m.clone(), 1);
                // symmetrize the monomial
                let sym = Perm::all(n).iter().fold(Poly::zero(n, h.field), |acc, w| acc.add(&mono.permute(w)));
                let direct = ds.iter().fold(Poly::zero(n, h.field), |acc, di| acc.add(&di.apply(&di.apply(&sym))));
                assert_eq!(h.act_on_poly(&sph, &sym), direct);
                assert_eq!(radial.apply(&sym), LocPoly::poly(direct));
            }
        }
    }
}

#[test]
fn literal_delta_conjugation_leaves_a_first_order_term() {
    let f = Fp::new(7).unwrap();
    let h = radial_part(2, f, 2);
    let conj = h.gauge(1);
    // the frozen gauge exponent is c itself
    assert_eq!(h.gauge(2), calogero_moser(2, f, 2));
    for cp in [2u64, f.neg(2), 1] {
        assert!(conj != calogero_moser(2, f, cp));
    }
    assert!(conj.terms().keys().any(|b| b.iter().sum::<u16>() == 1));
}

#[test]
fn c_zero_weyl_algebra_center() {
    for i in 0..2 {
        for probe in [Probe::X(0), Probe::X(1), Probe::D(0), Probe::D(1)] {
            assert!(commutator_vanishes(2, 5, 0, Candidate::PowerX(i), &probe, 8).unwrap());
            assert!(commutator_vanishes(2, 5, 0, Candidate::PowerD(i), &probe, 8).unwrap());
        }
    }
}

#[test]
fn verma_dimension_and_top_degree() {
    let m = verma_build(2, 5, 2, &part(&[2])).unwrap();
    assert_eq!(m.dim(), 50);
    let ch = m.character();
    assert_eq!(ch.total(), 50);
    assert_eq!(ch.top_degree(), Some(VermaModule::top_degree(2, 5) as i64));
    assert_eq!(VermaModule::top_degree(2, 5), 2 * 4 + 5);
    let m2 = verma_build(2, 5, 1, &part(&[1, 1])).unwrap();
    assert_eq!(m2.dim(), 50);
}

#[test]
fn x_raises_and_y_lowers_degree() {
    let m = verma_build(2, 5, 3, &part(&[1, 1])).unwrap();
    for b in 0..m.dim() {
        let d = m.degree_of(b);
        for i in 0..2 {
            assert!(m.x[i].cols[b].iter().all(|&(a, _)| m.degree_of(a) == d + 1));
            assert!(m.y[i].cols[b].iter().all(|&(a, _)| m.degree_of(a) + 1 == d));
        }
        assert!(m.s[0].cols[b].iter().all(|&(a, _)| m.degree_of(a) == d));
    }
}

/// The matrices satisfy the defining relations on the whole module.
#[test]
fn verma_matrices_satisfy_relations() {
    for tau in [part(&[2]), part(&[1, 1])] {
        let m = verma_build(2, 5, 2, &tau).unwrap();
        let f = m.field();
        let (x, y, s) = (
            [m.x[0].to_dense(), m.x[1].to_dense()],
            [m.y[0].to_dense(), m.y[1].to_dense()],
            m.s[0].to_dense(),
        );
        let id = Fp::identity(m.dim());
        let comm = |a: &Vec<Vec<u64>>, b: &Vec<Vec<u64>>| {
            let ab = f.mat_mul(a, b);
            let ba = f.mat_mul(b, a);
            ab.iter().zip(&ba).map(|(r, t)| r.iter().zip(t).map(|(u, v)| f.sub(*u, *v)).collect()).collect::<Vec<Vec<u64>>>()
        };
        let lin = |a: &Vec<Vec<u64>>, ca: u64, b: &Vec<Vec<u64>>, cb: u64| {
            a.iter().zip(b).map(|(r, t)| r.iter().zip(t).map(|(u, v)| f.add(f.mul(ca, *u), f.mul(cb, *v))).collect()).collect::<Vec<Vec<u64>>>()
        };
        assert_eq!(f.mat_mul(&s, &s), id);
        assert_eq!(f.mat_mul(&s, &x[0]), f.mat_mul(&x[1], &s));
        assert_eq!(f.mat_mul(&s, &y[0]), f.mat_mul(&y[1], &s));
        assert_eq!(comm(&y[0], &x[1]), lin(&s, m.c, &s, 0));
        assert_eq!(comm(&y[0], &x[0]), lin(&id, 1, &s, f.neg(m.c)));
        assert_eq!(comm(&y[0], &y[1]), lin(&id, 0, &id, 0));
    }
}

#[test]
fn grams_are_symmetric_and_ranks_order_independent() {
    for (c, tau) in [(0u64, part(&[2])), (2, part(&[2])), (1, part(&[1, 1]))] {
        let a = VermaModule::build_with_order(2, 5, c, &tau, MonomialOrder::Grevlex).unwrap();
        let b = VermaModule::build_with_order(2, 5, c, &tau, MonomialOrder::Lex).unwrap();
        let top = VermaModule::top_degree(2, 5);
        for g in a.gram_matrices(top) {
            assert_eq!(Fp::transpose(&g), g);
        }
        assert_eq!(a.simple_character(), b.simple_character(), "c = {c}, tau = {tau}");
    }
}

#[test]
fn simple_head_at_c_zero() {
    let l = simple_character(2, 5, 0, &part(&[2])).unwrap();
    assert_eq!(l.total(), 25);
    // the restricted Weyl algebra module k[x_1, x_2]/(x_1^5, x_2^5)
    for (d, &k) in &l.coeffs {
        let expect = monomials_of_degree(2, *d as usize).iter().filter(|m| m.iter().all(|&e| e < 5)).count();
        assert_eq!(k as usize, expect);
    }
}
