//! Exact dense linear algebra over Q and over prime fields.

mod field;
mod intelim;
mod mat;
mod subspace;

pub use field::{common_denominator, gauss_jordan, primitive_integer_vector, Field, PrimeField, Rationals, DEFAULT_PRIME};
pub use mat::Mat;
pub use subspace::{Echelon, Subspace};

/// Arbitrary-precision rational scalar.
pub type Q = num_rational::BigRational;
