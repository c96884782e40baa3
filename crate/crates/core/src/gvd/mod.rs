//! Geometric vertex decomposition: splitting an ideal along one variable
//! into its "cone" and "null" parts, certifying decomposability by explicit
//! degenerate chains, detecting triangular complete intersections, and
//! lifting Gröbner bases through a decomposition.

pub mod certify;
pub mod decompose;
pub mod lift;
pub mod tci;

pub use certify::{certify_w0_chain, BaseCase, ChainStepReport, GvdCertificate, StepChecks};
pub use decompose::{gvd_decompose, GvdChecks, GvdKind, GvdStep};
pub use lift::{gvd_gb_lift, linkage_2minors_check, LiftOutcome, LinkageHeights, LinkageReport};
pub use tci::{detect_tci, tci_conclusions, TciConclusions, TciFailure, TciOutcome, TciWitness};
