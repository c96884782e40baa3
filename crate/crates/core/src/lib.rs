//! Exact computer algebra for regular nilpotent Hessenberg patch ideals.
//!
//! The crate provides, from the ground up:
//!
//! * sparse multivariate polynomials over Q, Z, and prime fields F_p, with
//!   lexicographic monomial orders and weighted gradings ([`poly`],
//!   [`coeff`], [`order`], [`grading`]);
//! * a Groebner engine: multivariate division, Buchberger's algorithm,
//!   ideal membership, intersections, quotients, elimination, monomial
//!   ideals, Hilbert functions, and radical certificates ([`groebner`]);
//! * coordinate charts on the flag variety, the matrices whose entries cut
//!   out Hessenberg varieties locally, and the patch ideals they generate
//!   ([`charts`]);
//! * triangular complete intersection detection and geometric vertex
//!   decomposition certificates ([`gvd`]);
//! * Frobenius splittings of the chart coordinate rings in positive
//!   characteristic and the compatibility poset of patch ideals ([`frob`]).

pub mod coeff;
pub mod error;
pub mod grading;
pub mod monomial;
pub mod order;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod sample;
pub mod variable;

pub mod groebner;

pub mod charts;
pub mod frob;
pub mod gvd;
pub mod io;

pub use coeff::{Coeff, CoeffDomain};
pub use error::{Error, Result};
pub use grading::Grading;
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parse::parse_poly;
pub use poly::{Polynomial, RingOp, WeightedDegree};
pub use ring::Ring;
pub use variable::{Variable, VariableSet};
