//! Exact engine for truncated standard graded algebras: linear algebra,
//! ideals and colons, minimal resolutions, and verifiers for certificates of
//! infinite linearity defect.

pub mod error;
pub mod exactla;
pub mod galgebra;
pub mod constructions;
pub mod resolution;
pub mod certify;
pub mod search;

pub use error::{Error, Result};
pub use exactla::{Field, Mat, PrimeField, Rationals, Subspace, Q};
pub use galgebra::{ideal, ideal_from_strs, maximal_ideal, Algebra, Element, FreeMap, FreeModule, GradedIdeal, Poly, Submodule};
pub use constructions::{br_obstruction, AlgebraBase, AlgebraSpec, HPolynomial, BUILTINS};
pub use resolution::{resolve, BettiTable, GradedModule, LinPartReport, Resolution, ResolveOptions};
pub use certify::{AnyWitness, CertifyOptions, MatrixWitness, Report, Verdict, Witness};

/// Engine version, recorded in run manifests.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
