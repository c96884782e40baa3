//! Coordinate charts on the flag variety and the Hessenberg patch ideals
//! they carry: permutations and Hessenberg functions, the generic chart
//! matrices wM with their symbolic inverses, the generator family
//! f^w_{k,ℓ} = ((wM)⁻¹𝖭(wM))_{k,ℓ}, the chart monomial order and grading,
//! and the chain ideals driving the vertex-decomposition induction.

pub mod chain;
pub mod gens;
pub mod hess;
pub mod matrix;
pub mod perm;

pub use chain::{chain_ideal, chain_positions, hbar, mu, relabel_down, relabel_up};
pub use gens::{
    chart_var, column_major_order, hess_generators, recursion_f, recursion_family,
    reverse_order, row_major_order, w0_ring, PatchIdeal,
};
pub use hess::HessenbergFunction;
pub use matrix::{chart_grading, chart_ring, nilpotent_matrix, ChartMatrix, PolyMatrix};
pub use perm::Permutation;
