//! The specific algebras: artinian Veronese and Segre reductions, closed-form
//! h-polynomials, and the Backelin–Roos obstruction.

pub mod hpoly;
pub mod segre;
pub mod spec;
pub mod veronese;

pub use hpoly::{br_obstruction, h_poly_segre, h_poly_veronese, HPolynomial, ObstructionReport, ObstructionVerdict};
pub use segre::{segre_artinian, segre_s36, segre_s45, two_minors, J_S36, J_S45, MATRIX_S36, MATRIX_S45};
pub use spec::{build_builtin, build_presentation_strs, AlgebraBase, AlgebraSpec, BUILTINS, DEFAULT_TRUNCATION};
pub use veronese::{veronese_artinian, veronese_variable_monomials};
