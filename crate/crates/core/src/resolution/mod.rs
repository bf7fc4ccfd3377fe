//! Minimal graded free resolutions over truncated algebras: Betti tables,
//! regularity through a cutoff, linear-part homology, and Betti splittings.

mod graded;
mod linpart;
mod resolve;
mod splitting;

pub use graded::GradedModule;
pub use linpart::{
    linear_part_from_resolution, linear_part_homology, linear_part_strand, linear_strand, LinPartMethod, LinPartReport,
};
pub use resolve::{poincare_partial, regularity_upto, resolve, syzygy, BettiTable, Resolution, ResolveOptions};
pub use splitting::{betti_splitting_numeric, summand_betti_check, SplittingReport, SplittingRow, SummandRow};

#[cfg(test)]
mod tests;
