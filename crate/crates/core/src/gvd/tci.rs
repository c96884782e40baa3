use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::groebner::{coprime_leads_gb_check, MonomialIdeal};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::Ring;

/// Evidence that an ordered generator list is a triangular complete
/// intersection: each lead term is a unit times a single variable, and
/// that variable occurs nowhere in any later generator.
#[derive(Clone, Debug)]
pub struct TciWitness {
    ring: Ring,
    order: MonomialOrder,
    gens: Vec<Polynomial>,
    lead_vars: Vec<usize>,
    units: Vec<Coeff>,
}

/// Why a generator sequence fails to be triangular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TciFailure {
    /// Generator `index` has a lead term that is not a single variable.
    NonVariableLead { index: usize },
    /// The lead variable of generator `index` occurs in the later
    /// generator `later`.
    LeadVarReappears { index: usize, later: usize },
}

#[derive(Clone, Debug)]
pub enum TciOutcome {
    Triangular(TciWitness),
    NotTriangular(TciFailure),
}

impl TciOutcome {
    pub fn witness(self) -> Option<TciWitness> {
        match self {
            TciOutcome::Triangular(w) => Some(w),
            TciOutcome::NotTriangular(_) => None,
        }
    }

    pub fn is_triangular(&self) -> bool {
        matches!(self, TciOutcome::Triangular(_))
    }
}

/// Check the two triangularity conditions on the generator sequence.
/// Zero generators are an error (they have no lead term at all).
pub fn detect_tci(gens: &[Polynomial], order: &MonomialOrder) -> Result<TciOutcome> {
    if gens.is_empty() {
        return Err(Error::InvalidVariableSet(
            "empty generator list has no triangular witness".into(),
        ));
    }
    let ring = gens[0].ring().clone();
    let mut lead_vars = Vec::with_capacity(gens.len());
    let mut units = Vec::with_capacity(gens.len());
    for (idx, g) in gens.iter().enumerate() {
        if !g.ring().same_ring(&ring) {
            return Err(Error::RingMismatch);
        }
        let (lm, lc) = g
            .leading_term(order)
            .ok_or(Error::ZeroPolynomial("triangularity detection"))?;
        match lm.single_var() {
            Some(v) => {
                lead_vars.push(v);
                units.push(lc.clone());
            }
            None => {
                return Ok(TciOutcome::NotTriangular(TciFailure::NonVariableLead {
                    index: idx,
                }))
            }
        }
    }
    for (idx, &v) in lead_vars.iter().enumerate() {
        for (later, g) in gens.iter().enumerate().skip(idx + 1) {
            if g.contains_var(v) {
                return Ok(TciOutcome::NotTriangular(TciFailure::LeadVarReappears {
                    index: idx,
                    later,
                }));
            }
        }
    }
    Ok(TciOutcome::Triangular(TciWitness {
        ring,
        order: order.clone(),
        gens: gens.to_vec(),
        lead_vars,
        units,
    }))
}

impl TciWitness {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Indices of the lead variables x_{i_1}, …, x_{i_N}, in generator order.
    pub fn lead_vars(&self) -> &[usize] {
        &self.lead_vars
    }

    pub fn units(&self) -> &[Coeff] {
        &self.units
    }

    /// The number of generators; the triangular structure makes this the
    /// height of the ideal.
    pub fn height(&self) -> usize {
        self.gens.len()
    }
}

/// What the triangular structure already proves, without running
/// Buchberger: the generators are a Gröbner basis, the initial ideal is
/// the ideal of the lead variables, and the quotient has dimension
/// (variable count − generator count).
#[derive(Clone, Debug)]
pub struct TciConclusions {
    pub groebner_basis: Vec<Polynomial>,
    pub initial_ideal: MonomialIdeal,
    pub dimension: usize,
    pub height: usize,
}

pub fn tci_conclusions(witness: &TciWitness) -> Result<TciConclusions> {
    if !coprime_leads_gb_check(&witness.gens, &witness.order)? {
        // Distinct single-variable leads are always pairwise coprime.
        return Err(Error::CheckFailed {
            context: "triangular witness".into(),
            check: "pairwise coprime lead monomials".into(),
        });
    }
    let nvars = witness.ring.num_vars();
    let initial_ideal = MonomialIdeal::new(
        &witness.ring,
        witness
            .lead_vars
            .iter()
            .map(|&v| Monomial::var(nvars, v))
            .collect(),
    );
    Ok(TciConclusions {
        groebner_basis: witness.gens.clone(),
        initial_ideal,
        dimension: nvars - witness.gens.len(),
        height: witness.gens.len(),
    })
}
