//! Frobenius splittings over prime fields: the trace map, standard and
//! constructed splittings, compatibility certification for patch ideals,
//! and the inclusion poset of simultaneously split ideals.

pub mod compat;
pub mod poset;
pub mod split;
pub mod trace;

pub use compat::{compat_check, CompatReport, SampledChecks};
pub use poset::{split_poset, PosetNode, SplitPoset};
pub use split::{
    build_f_i, build_f_n, frobenius_power, phi_f, reduce_mod_p, splitting_unit_check,
    Provenance, SplitUnitReport, SplittingElement,
};
pub use trace::{phi_std, require_fp, trace};
