//! Exact q,t-combinatorics and modular Cherednik-algebra computations.
//!
//! The crate is organized bottom-up:
//!
//! - [`exactqt`]: exact scalars in `Q(q^(1/2), t^(1/2))`
//! - [`partitions`]: Young diagrams, arm/leg statistics
//! - [`symfunc`]: degree-`n` symmetric functions over the q,t field
//! - [`macdonald`]: modified Macdonald polynomials and the Kostka-Macdonald table
//! - [`hilbk`]: fixed-point K-theory of the Hilbert scheme of points in the plane
//! - [`charform`]: the bigraded character pipeline for spherical Cherednik modules
//! - [`cherednik`]: the rational Cherednik algebra of type `A` over `F_p`

pub mod charform;
pub mod cherednik;
pub mod error;
pub mod exactqt;
pub mod hilbk;
pub mod linalg;
pub mod macdonald;
pub mod pfun;
mod cache;
pub mod partitions;
pub mod symfunc;

pub use error::{Error, Result};
pub use exactqt::{BigRat, Exp, LaurentQT, Limit, RatQT};
pub use partitions::{Box, Partition};
pub use pfun::PartitionFunction;
