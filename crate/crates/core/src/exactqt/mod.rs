//! Exact scalars: rationals, Laurent polynomials on the half-integer lattice in
//! `q` and `t`, and normalized rational functions.

mod gcd;
mod laurent;
mod ratqt;
pub mod text;

pub use gcd::is_prime_u64;
pub use laurent::{Exp, LaurentQT};
pub use ratqt::{Limit, RatQT};

/// Arbitrary-precision rational number; always reduced with a positive denominator.
pub type BigRat = num_rational::BigRational;

pub fn qt_add(a: &RatQT, b: &RatQT) -> RatQT {
    a + b
}

pub fn qt_mul(a: &RatQT, b: &RatQT) -> RatQT {
    a * b
}

pub fn qt_div(a: &RatQT, b: &RatQT) -> crate::Result<RatQT> {
    a.checked_div(b)
}

pub fn qt_substitute(f: &RatQT, q_exp: i64, t_exp: i64) -> RatQT {
    f.substitute(q_exp, t_exp)
}

pub fn qt_limit_at_one(f: &RatQT) -> Limit {
    f.limit_at_one()
}
