//! Fixed inputs shared by the benchmarks, so every run measures the same work.

use cherednik_core::cherednik::checks::random_word;
use cherednik_core::cherednik::fp::Fp;
use cherednik_core::cherednik::poly::monomials_up_to;
use cherednik_core::cherednik::{CherednikAlgebra, Gen, Poly};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A polynomial with every monomial of degree at most `d` present, with
/// coefficients cycling through the nonzero residues.
pub fn dense_poly(n: usize, p: u64, d: usize) -> Poly {
    let field = Fp::new(p).expect("prime");
    let mut f = Poly::zero(n, field);
    for (k, m) in monomials_up_to(n, d).into_iter().enumerate() {
        f.add_term(m, 1 + k as u64 % (p - 1));
    }
    f
}

/// `count` words of length at most `max_len`, from a fixed seed.
pub fn words(alg: &CherednikAlgebra, count: usize, max_len: usize) -> Vec<Vec<Gen>> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    (0..count).map(|_| random_word(alg, &mut rng, max_len)).collect()
}
