//! Randomized invariants of the modular Cherednik algebra engine.

use cherednik_core::cherednik::checks::random_word;
use cherednik_core::cherednik::fp::Fp;
use cherednik_core::cherednik::poly::monomials_up_to;
use cherednik_core::cherednik::{CherednikAlgebra, DunklOperator, GroebnerBasis, MonomialOrder, Poly};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_poly(n: usize, field: Fp, rng: &mut ChaCha8Rng, max_degree: usize) -> Poly {
    let mut f = Poly::zero(n, field);
    for m in monomials_up_to(n, max_degree) {
        if rng.gen_bool(0.3) {
            f.add_term(m, rng.gen_range(1..field.p()));
        }
    }
    f
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn multiplication_is_associative(seed in any::<u64>(), n in 1usize..=3, c in 0u64..5) {
        let alg = CherednikAlgebra::new(n, 5, c).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let [u, v, w] = [0; 3].map(|_| alg.normalize(&random_word(&alg, &mut rng, 4)));
        prop_assert_eq!(alg.mul(&alg.mul(&u, &v), &w), alg.mul(&u, &alg.mul(&v, &w)));
    }

    #[test]
    fn polynomial_action_is_a_representation(seed in any::<u64>(), n in 1usize..=3, c in 0u64..7) {
        let alg = CherednikAlgebra::new(n, 7, c).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = alg.normalize(&random_word(&alg, &mut rng, 3));
        let v = alg.normalize(&random_word(&alg, &mut rng, 3));
        let f = random_poly(n, alg.field, &mut rng, 4);
        prop_assert_eq!(alg.act_on_poly(&alg.mul(&u, &v), &f), alg.act_on_poly(&u, &alg.act_on_poly(&v, &f)));
    }

    #[test]
    fn anti_involution_squares_to_identity(seed in any::<u64>(), n in 1usize..=3) {
        let alg = CherednikAlgebra::new(n, 5, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = alg.normalize(&random_word(&alg, &mut rng, 6));
        prop_assert_eq!(alg.anti_involution(&alg.anti_involution(&u)), u);
    }

    #[test]
    fn dunkl_operators_commute_on_random_polynomials(seed in any::<u64>(), c in 0u64..7) {
        let field = Fp::new(7).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_poly(3, field, &mut rng, 6);
        let d: Vec<DunklOperator> = (0..3).map(|i| DunklOperator::new(3, field, c, i)).collect();
        for i in 0..3 {
            for j in i + 1..3 {
                prop_assert_eq!(d[i].apply(&d[j].apply(&f)), d[j].apply(&d[i].apply(&f)));
            }
        }
    }

    #[test]
    fn reduction_is_idempotent_and_kills_the_ideal(seed in any::<u64>(), lex in any::<bool>()) {
        let field = Fp::new(5).unwrap();
        let order = if lex { MonomialOrder::Lex } else { MonomialOrder::Grevlex };
        let gens: Vec<Poly> = (1..=2).map(|k| Poly::elementary_in_powers(2, field, k, 5)).collect();
        let gb = GroebnerBasis::new(&gens, order);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_poly(2, field, &mut rng, 14);
        let r = gb.reduce(&f);
        prop_assert_eq!(gb.reduce(&r), r.clone());
        let h = random_poly(2, field, &mut rng, 3);
        prop_assert!(gb.reduce(&gens[1].mul(&h)).is_zero());
        prop_assert_eq!(gb.reduce(&f.add(&gens[0].mul(&h))), r);
    }
}

#[test]
fn coinvariant_quotient_has_dimension_p_to_the_n_times_n_factorial() {
    for (n, p) in [(1usize, 5u64), (2, 5), (2, 7), (3, 5)] {
        let field = Fp::new(p).unwrap();
        let gens: Vec<Poly> = (1..=n).map(|k| Poly::elementary_in_powers(n, field, k, p as u16)).collect();
        for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
            let std = GroebnerBasis::new(&gens, order).standard_monomials().expect("finite quotient");
            let fact: usize = (1..=n).product();
            assert_eq!(std.len(), (p as usize).pow(n as u32) * fact, "n = {n}, p = {p}, {}", order.name());
        }
    }
}
