//! Exact-arithmetic commutative algebra over weighted-graded quotient
//! rings `k[x_1..x_n]/I`: Groebner bases, syzygies, minimal free
//! resolutions, Ext/Tor, depth, and certified direct-summand and
//! decomposition structure.
//!
//! Complete local rings are modeled by their weighted-graded polynomial
//! avatars; all inputs are homogeneous and all arithmetic is exact (prime
//! field or rationals).

pub mod error;
pub mod scalar;
pub mod monomial;
pub mod poly;
pub mod parse;
pub mod ring;
pub mod vector;
pub mod linalg;
pub mod groebner;
pub mod freemod;
pub mod fpmod;
pub mod hilbert;
pub mod hom;
pub mod resolution;
pub mod homalg;
pub mod structure;
pub mod loci;
pub mod sample;

#[cfg(test)]
pub(crate) mod test_support;

pub use error::{AlgebraError, Result};
pub use fpmod::{FPMap, FPModule};
pub use freemod::{FreeModule, ModuleMap};
pub use monomial::Monomial;
pub use poly::Polynomial;
pub use ring::{make_quotient_ring, AmbientRing, QuotientRing};
pub use scalar::{FieldSpec, Scalar};
pub use vector::ModuleVector;
