//! Dunkl operators on `F_p[x_1, .., x_n]`.
//!
//! `D_i = ∂_i - c Σ_{j≠i} (1 - s_ij) / (x_i - x_j)`. With this sign the
//! operators `x_i·`, `D_i` and the variable swaps satisfy the defining
//! relations of `H_c` with `y_i ↦ D_i` verbatim: `[D_i, x_j] = c s_ij` and
//! `[D_k, x_k] = 1 - c Σ_{i≠k} s_ik`. This is the frozen Dunkl sign reported
//! in every CLI conventions block.

use super::fp::Fp;
use super::poly::Poly;

pub const DUNKL_SIGN: &str = "D_i = d/dx_i - c * sum_{j != i} (1 - s_ij)/(x_i - x_j)";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DunklOperator {
    pub i: usize,
    pub c: u64,
    pub n: usize,
    pub field: Fp,
}

impl DunklOperator {
    pub fn new(n: usize, field: Fp, c: u64, i: usize) -> Self {
        assert!(i < n, "Dunkl index {i} out of range for n = {n}");
        DunklOperator { i, c: c % field.p(), n, field }
    }

    pub fn apply(&self, f: &Poly) -> Poly {
        let mut out = f.derivative(self.i);
        if self.c != 0 {
            let mut reflections = Poly::zero(self.n, self.field);
            for j in (0..self.n).filter(|&j| j != self.i) {
                reflections = reflections.add(&f.divided_difference(self.i, j));
            }
            out = out.sub(&reflections.scale(self.c));
        }
        out
    }

    /// `D_i^k f`.
    pub fn apply_power(&self, f: &Poly, k: u64) -> Poly {
        (0..k).fold(f.clone(), |g, _| self.apply(&g))
    }
}

pub fn dunkl_apply(d: &DunklOperator, f: &Poly) -> Poly {
    d.apply(f)
}

/// All `n` Dunkl operators for the given parameter.
pub fn dunkl_operators(n: usize, field: Fp, c: u64) -> Vec<DunklOperator> {
    (0..n).map(|i| DunklOperator::new(n, field, c, i)).collect()
}
