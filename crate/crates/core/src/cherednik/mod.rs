//! The rational Cherednik algebra `H_c` of type `A_{n-1}` over `F_p`.
//!
//! Generators `x_i`, `y_i` and `S_n`, with relations
//!
//! ```text
//! s_ij x_i = x_j s_ij,   s_ij y_i = y_j s_ij
//! [y_i, x_j] = c s_ij                      (i != j)
//! [y_k, x_k] = 1 - c Σ_{i≠k} s_ik
//! [x_i, x_j] = 0 = [y_i, y_j]
//! ```
//!
//! Submodules: [`pbw`] for normal forms, [`dunkl`] for the polynomial
//! representation, [`calogero`] for the Calogero-Moser operator, [`verma`]
//! for baby Verma modules and their simple heads, [`pcenter`] for the
//! centrality checks, and [`checks`] for the remaining self-check suites.

pub mod calogero;
pub mod checks;
pub mod dunkl;
pub mod fp;
pub mod groebner;
pub mod pbw;
pub mod pcenter;
pub mod perm;
pub mod poly;
pub mod specht;
pub mod verma;

pub use calogero::{calogero_moser, radial_part, DiffOp, LocPoly};
pub use dunkl::{dunkl_apply, DunklOperator, DUNKL_SIGN};
pub use fp::Fp;
pub use groebner::{GroebnerBasis, MonomialOrder};
pub use pbw::{CherednikAlgebra, CherednikElement, Gen, Strategy};
pub use pcenter::{p_center_check, CheckResult, SuiteReport};
pub use perm::Perm;
pub use poly::Poly;
pub use verma::{contravariant_gram, simple_character, verma_build, GradedCharacter, VermaModule};

#[cfg(test)]
mod tests;
