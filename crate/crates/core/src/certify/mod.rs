//! Verifiers for certificates of infinite linearity defect: Koszul
//! filtrations, linear quotients, socle shifts, Betti splittings, witnesses
//! and the chain of rings the conclusion lifts along.

mod bundled;
mod context;
mod filtration;
mod lift;
mod linear;
mod report;
mod splitting;
mod witness;

pub use bundled::{bundled_witness, BUNDLED};
pub use context::{parse_vector, variable_subset, IdealSpec, KoszulContext, VectorExpr};
pub use filtration::{verify_koszul_filtration, FiltrationCert, FiltrationOutcome, FiltrationStep, NamedIdeal};
pub use lift::verify_lift_chain;
pub use linear::{regularity_bound_by_induction, suggest_linear_quotients, verify_linear_quotients, verify_socle_shift, LinearQuotientsCert};
pub use report::{Check, LiftLink, Report, Status, Verdict, REPORT_SCHEMA};
pub use splitting::{verify_betti_splitting, SplittingRegs};
pub use witness::{
    numeric_regularity, strong_koszul_spot_check, verify_any, verify_matrix_witness, verify_witness, verify_witness_in, AnyWitness,
    CertifyOptions, IntersectionClaim, MatrixSpec, MatrixWitness, Rings, Witness, WitnessCerts,
};
