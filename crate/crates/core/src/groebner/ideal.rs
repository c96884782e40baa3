use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::Ring;
use crate::variable::{Variable, VariableSet};

use super::buchberger::buchberger;
use super::division::{divide, normal_form};
use super::monomial_ideal::MonomialIdeal;

/// Finitely generated ideal in a polynomial ring, with a cached Groebner
/// basis for the first order it was computed under.
#[derive(Debug)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    cache: OnceLock<(MonomialOrder, Arc<Vec<Polynomial>>)>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            cache: self.cache.clone(),
        }
    }
}

impl PartialEq for Ideal {
    /// Syntactic equality of the generator lists; use [`Ideal::equal`] for
    /// mathematical equality.
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.gens == other.gens
    }
}

impl Ideal {
    /// Zero generators are dropped; they carry no information.
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            if !g.ring().same_ring(ring) {
                return Err(Error::RingMismatch);
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal {
            ring: ring.clone(),
            gens,
            cache: OnceLock::new(),
        })
    }

    pub fn zero(ring: &Ring) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
            cache: OnceLock::new(),
        }
    }

    pub fn unit(ring: &Ring) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: vec![Polynomial::one(ring)],
            cache: OnceLock::new(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Ideal generated by both generator lists.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn plus_element(&self, f: &Polynomial) -> Result<Ideal> {
        if !f.ring().same_ring(&self.ring) {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.gens.clone();
        gens.push(f.clone());
        Ideal::new(&self.ring, gens)
    }

    /// The Groebner basis under `order`, cached after the first computation.
    pub fn groebner_basis(&self, order: &MonomialOrder) -> Result<Arc<Vec<Polynomial>>> {
        if let Some((cached_order, basis)) = self.cache.get() {
            if cached_order == order {
                return Ok(basis.clone());
            }
            return Ok(Arc::new(buchberger(&self.gens, order)?));
        }
        let basis = Arc::new(buchberger(&self.gens, order)?);
        let _ = self.cache.set((order.clone(), basis.clone()));
        Ok(basis)
    }

    pub fn normal_form(&self, f: &Polynomial, order: &MonomialOrder) -> Result<Polynomial> {
        let gb = self.groebner_basis(order)?;
        normal_form(f, &gb, order)
    }

    pub fn contains(&self, f: &Polynomial, order: &MonomialOrder) -> Result<bool> {
        Ok(self.normal_form(f, order)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal, order: &MonomialOrder) -> Result<bool> {
        for g in &other.gens {
            if !self.contains(g, order)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Mathematical equality via mutual membership.
    pub fn equal(&self, other: &Ideal, order: &MonomialOrder) -> Result<bool> {
        Ok(self.contains_ideal(other, order)? && other.contains_ideal(self, order)?)
    }

    pub fn is_unit(&self, order: &MonomialOrder) -> Result<bool> {
        self.contains(&Polynomial::one(&self.ring), order)
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// The initial ideal: monomial ideal of leading terms under `order`.
    pub fn initial_ideal(&self, order: &MonomialOrder) -> Result<MonomialIdeal> {
        let gb = self.groebner_basis(order)?;
        Ok(MonomialIdeal::new(
            &self.ring,
            gb.iter()
                .filter(|g| !g.is_zero())
                .map(|g| g.leading_monomial(order).unwrap().clone())
                .collect(),
        ))
    }

    /// Intersection via the auxiliary-variable trick: eliminate t from
    /// t*I + (1-t)*J with t lexicographically greatest.
    pub fn intersection(&self, other: &Ideal, order: &MonomialOrder) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let (ext, ext_order) = extend_with_aux(&self.ring, order)?;
        let t = Polynomial::variable(&ext, 0);
        let one_minus_t = &Polynomial::one(&ext) - &t;
        let mut gens: Vec<Polynomial> = Vec::new();
        for g in &self.gens {
            gens.push(&t * &embed(g, &ext)?);
        }
        for g in &other.gens {
            gens.push(&one_minus_t * &embed(g, &ext)?);
        }
        let gb = buchberger(&gens, &ext_order)?;
        let mut out = Vec::new();
        for g in &gb {
            if !g.contains_var(0) {
                out.push(contract(g, &self.ring)?);
            }
        }
        Ideal::new(&self.ring, out)
    }

    /// Ideal quotient (I : f) computed as (1/f) * (I ∩ <f>).
    pub fn quotient(&self, f: &Polynomial, order: &MonomialOrder) -> Result<Ideal> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial("ideal quotient by"));
        }
        if !f.ring().same_ring(&self.ring) {
            return Err(Error::RingMismatch);
        }
        let principal = Ideal::new(&self.ring, vec![f.clone()])?;
        let inter = self.intersection(&principal, order)?;
        let mut out = Vec::new();
        for g in &inter.gens {
            let (q, r) = divide(g, std::slice::from_ref(f), order)?;
            if !r.is_zero() {
                return Err(Error::ExactDivisionFailed(format!(
                    "element of I ∩ <f> not divisible by f: {g}"
                )));
            }
            out.push(q.into_iter().next().unwrap());
        }
        Ideal::new(&self.ring, out)
    }

    /// Generators of the elimination ideal: the part of a Groebner basis
    /// (under an order ranking `vars` greatest) free of those variables.
    pub fn eliminate(&self, vars: &[usize], order: &MonomialOrder) -> Result<Ideal> {
        let elim_order = order.with_front(vars)?;
        let gb = buchberger(&self.gens, &elim_order)?;
        let mut out = Vec::new();
        for g in gb {
            if vars.iter().all(|&v| !g.contains_var(v)) {
                out.push(g);
            }
        }
        Ideal::new(&self.ring, out)
    }

    /// Radical certificate: a squarefree initial ideal proves the ideal is
    /// radical; otherwise the test is inconclusive.
    pub fn radical_certificate(&self, order: &MonomialOrder) -> Result<RadicalCertificate> {
        if self.initial_ideal(order)?.is_squarefree() {
            Ok(RadicalCertificate::SquarefreeInitial)
        } else {
            Ok(RadicalCertificate::Inconclusive)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RadicalCertificate {
    /// The initial ideal is squarefree, hence the ideal is radical.
    SquarefreeInitial,
    Inconclusive,
}

impl RadicalCertificate {
    pub fn certifies_radical(&self) -> bool {
        matches!(self, RadicalCertificate::SquarefreeInitial)
    }
}

/// The ring with one auxiliary variable prepended, and the order extension
/// making it lexicographically greatest.
fn extend_with_aux(ring: &Ring, order: &MonomialOrder) -> Result<(Ring, MonomialOrder)> {
    let aux = Variable::named("#t");
    if ring.var_index(&aux).is_some() {
        return Err(Error::InvalidVariableSet(
            "ring already contains the reserved auxiliary variable #t".into(),
        ));
    }
    let mut vars = vec![aux];
    vars.extend(ring.vars().iter().cloned());
    let ext = Ring::new(VariableSet::new(vars)?, ring.domain().clone(), None)?;
    let mut priority = vec![0usize];
    priority.extend(order.priority().iter().map(|&v| v + 1));
    Ok((ext, MonomialOrder::from_priority(priority)?))
}

fn embed(f: &Polynomial, ext: &Ring) -> Result<Polynomial> {
    f.rename_vars(ext, &|i| Some(i + 1), &|i| {
        Error::IndexOutOfRange(format!("variable {i} in embedding"))
    })
}

fn contract(f: &Polynomial, base: &Ring) -> Result<Polynomial> {
    f.rename_vars(base, &|i| i.checked_sub(1), &|_| {
        Error::IndexOutOfRange("auxiliary variable occurs in contraction".into())
    })
}
