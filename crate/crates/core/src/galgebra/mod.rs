//! Graded algebras given by structure constants, their presentations,
//! quotients, ideals and submodules of free modules.

pub mod algebra;
pub mod expr;
pub mod poly;
pub mod presentation;
pub mod module;
pub mod quotient;

pub use algebra::{Algebra, AlgebraParts, Element, SparseCols, SparseVec};
pub use expr::{parse_expr, EvalTarget, Expr};
pub use poly::{Poly, PolyRing};
pub use presentation::build_from_presentation;
pub use module::{ideal, ideal_from_strs, maximal_ideal, format_vector, Block, FreeMap, FreeModule, GradedIdeal, Submodule};
pub use quotient::quotient_by_linear_forms;
