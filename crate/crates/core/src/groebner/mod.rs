//! Groebner-basis machinery: multivariate division, Buchberger's algorithm
//! (plain and cofactor-traced), ideals with cached bases and the derived
//! operations (membership, intersection, quotient, elimination), and
//! combinatorics of monomial ideals (dimension, Hilbert functions).

pub mod buchberger;
pub mod division;
pub mod ideal;
pub mod monomial_ideal;

pub use buchberger::{autoreduce, buchberger, buchberger_traced, coprime_leads_gb_check, is_groebner, s_polynomial};
pub use division::{divide, normal_form};
pub use ideal::{Ideal, RadicalCertificate};
pub use monomial_ideal::MonomialIdeal;
