use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::grading::Grading;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::ring::Ring;

/// Sparse multivariate polynomial with exact coefficients.
///
/// Terms are kept in a `BTreeMap` under the canonical internal monomial
/// order, so iteration and printing are deterministic. A polynomial belongs
/// to exactly one ring; arithmetic between different rings panics (use
/// [`checked_binop`] for a fallible version).
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, Coeff>,
}

/// The three ring operations exposed by [`checked_binop`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Sub,
    Mul,
}

/// Weighted degree of a polynomial under a grading.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightedDegree {
    /// Degree of the zero polynomial is undefined; reported as this value.
    Zero,
    Homogeneous(i64),
    /// One representative monomial per occurring degree, ascending.
    Inhomogeneous(Vec<(i64, Monomial)>),
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, ring.domain().one())
    }

    pub fn constant(ring: &Ring, c: Coeff) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(ring.num_vars()), c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn from_i64(ring: &Ring, v: i64) -> Self {
        Self::constant(ring, ring.domain().from_i64(v))
    }

    pub fn variable(ring: &Ring, i: usize) -> Self {
        assert!(i < ring.num_vars(), "variable index out of range");
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(ring.num_vars(), i), ring.domain().one());
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn term(ring: &Ring, m: Monomial, c: Coeff) -> Self {
        assert_eq!(m.num_vars(), ring.num_vars(), "monomial arity mismatch");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Coeff)>>(ring: &Ring, iter: I) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(m, c)| m.is_one() && c.is_one())
                .unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in the canonical internal monomial order, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff_of(&self, m: &Monomial) -> Option<&Coeff> {
        self.terms.get(m)
    }

    fn add_term(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        let domain = self.ring.domain().clone();
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = domain.add(e.get(), &c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn assert_same_ring(&self, other: &Polynomial) {
        assert!(
            self.ring.same_ring(&other.ring),
            "ring mismatch: {:?} vs {:?}",
            self.ring,
            other.ring
        );
    }

    pub fn add_ref(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg_ref(&self) -> Polynomial {
        let domain = self.ring.domain();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), domain.neg(c)))
                .collect(),
        }
    }

    pub fn sub_ref(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        let domain = self.ring.domain().clone();
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), domain.neg(c));
        }
        out
    }

    pub fn mul_ref(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        self.mul_budgeted(other, usize::MAX)
            .expect("unbounded multiplication cannot exceed budget")
    }

    /// Product with a cap on the number of distinct monomials accumulated.
    pub fn mul_budgeted(&self, other: &Polynomial, budget: usize) -> Result<Polynomial> {
        self.assert_same_ring(other);
        let domain = self.ring.domain().clone();
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc: HashMap<Monomial, Coeff> =
            HashMap::with_capacity(large.terms.len().saturating_mul(2));
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                let m = ma.mul(mb);
                let c = domain.mul(ca, cb);
                match acc.entry(m) {
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let s = domain.add(e.get(), &c);
                        if s.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = s;
                        }
                    }
                }
                if acc.len() > budget {
                    return Err(Error::BudgetExceeded {
                        what: "polynomial product term count".into(),
                        limit: budget,
                    });
                }
            }
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn mul_coeff(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let domain = self.ring.domain();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), domain.mul(a, c)))
                .collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let domain = self.ring.domain();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(mm, a)| (mm.mul(m), domain.mul(a, c)))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        self.pow_budgeted(e, usize::MAX)
            .expect("unbounded power cannot exceed budget")
    }

    /// Power by repeated squaring with a term-count budget on every
    /// intermediate product.
    pub fn pow_budgeted(&self, e: u32, budget: usize) -> Result<Polynomial> {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        loop {
            if e & 1 == 1 {
                acc = acc.mul_budgeted(&base, budget)?;
            }
            e >>= 1;
            if e == 0 {
                return Ok(acc);
            }
            base = base.mul_budgeted(&base, budget)?;
        }
    }

    /// Fallible ring arithmetic: errors on ring mismatch instead of panicking.
    pub fn checked_binop(op: RingOp, a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
        if !a.ring.same_ring(&b.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(match op {
            RingOp::Add => a.add_ref(b),
            RingOp::Sub => a.sub_ref(b),
            RingOp::Mul => a.mul_ref(b),
        })
    }

    /// Greatest term under the order, if the polynomial is nonzero.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Coeff)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
            .map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    pub fn leading_coeff(&self, order: &MonomialOrder) -> Option<&Coeff> {
        self.leading_term(order).map(|(_, c)| c)
    }

    /// Scales so the leading coefficient is 1. Errors over Z unless the
    /// leading coefficient is a unit.
    pub fn monic(&self, order: &MonomialOrder) -> Result<Polynomial> {
        let lc = self
            .leading_coeff(order)
            .ok_or(Error::ZeroPolynomial("monic scaling"))?;
        let inv = self.ring.domain().inv(lc)?;
        Ok(self.mul_coeff(&inv))
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    pub fn weighted_degree(&self, grading: &Grading) -> WeightedDegree {
        if self.is_zero() {
            return WeightedDegree::Zero;
        }
        let mut reps: BTreeMap<i64, Monomial> = BTreeMap::new();
        for m in self.terms.keys() {
            reps.entry(m.weighted_degree(grading))
                .or_insert_with(|| m.clone());
        }
        if reps.len() == 1 {
            WeightedDegree::Homogeneous(*reps.keys().next().unwrap())
        } else {
            WeightedDegree::Inhomogeneous(reps.into_iter().collect())
        }
    }

    pub fn contains_var(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.exp(var) > 0)
    }

    pub fn max_exp_of(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(var)).max().unwrap_or(0)
    }

    /// Which variables occur in at least one term.
    pub fn support_vars(&self) -> Vec<bool> {
        let mut s = vec![false; self.ring.num_vars()];
        for m in self.terms.keys() {
            for i in m.support() {
                s[i] = true;
            }
        }
        s
    }

    /// Writes `self = y^d * q + r` where d is the top power of the variable
    /// `y` occurring in any term, q is y-free in its top slice sense (the
    /// coefficient of y^d), and every term of r has y-exponent < d.
    /// The zero polynomial decomposes as (0, 0, 0).
    pub fn decompose_top_power(&self, y: usize) -> (u32, Polynomial, Polynomial) {
        if self.is_zero() {
            return (0, Self::zero(&self.ring), Self::zero(&self.ring));
        }
        let d = self.max_exp_of(y);
        let mut q = Self::zero(&self.ring);
        let mut r = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            if m.exp(y) == d {
                let mut exps = m.exps().to_vec();
                exps[y] = 0;
                q.add_term(Monomial::from_exps(exps), c.clone());
            } else {
                r.add_term(m.clone(), c.clone());
            }
        }
        (d, q, r)
    }

    /// The initial y-form in_y(self): the sum of all terms whose y-exponent
    /// is maximal, i.e. y^d * q from [`decompose_top_power`].
    pub fn initial_y_form(&self, y: usize) -> Polynomial {
        let (d, q, _) = self.decompose_top_power(y);
        let yd = Monomial::var(self.ring.num_vars(), y).pow(d);
        q.mul_term(&yd, &self.ring.domain().one())
    }

    /// Same variables, new coefficient domain (where a canonical map exists).
    pub fn map_domain(&self, target: &Ring) -> Result<Polynomial> {
        if target.vars() != self.ring.vars() {
            return Err(Error::RingMismatch);
        }
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), target.domain().convert(c)?);
        }
        Ok(out)
    }

    /// Re-indexes variables into a target ring over the same domain.
    /// `map(i)` gives the target slot for source variable i; a `None` for a
    /// variable that actually occurs is an error reported via `on_missing`.
    pub fn rename_vars(
        &self,
        target: &Ring,
        map: &dyn Fn(usize) -> Option<usize>,
        on_missing: &dyn Fn(usize) -> Error,
    ) -> Result<Polynomial> {
        if target.domain() != self.ring.domain() {
            return Err(Error::RingMismatch);
        }
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.num_vars()];
            for i in m.support() {
                match map(i) {
                    Some(j) if j < target.num_vars() => exps[j] += m.exp(i),
                    _ => return Err(on_missing(i)),
                }
            }
            out.add_term(Monomial::from_exps(exps), c.clone());
        }
        Ok(out)
    }

    /// Canonical text form: terms descending under `order`, coefficients
    /// printed per domain, `*` between all factors, `^` for exponents > 1.
    pub fn to_string_with(&self, order: &MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut ts: Vec<(&Monomial, &Coeff)> = self.terms.iter().collect();
        ts.sort_by(|(a, _), (b, _)| order.cmp(b, a));
        let mut out = String::new();
        for (idx, (m, c)) in ts.iter().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mag = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || m.is_one() {
                factors.push(mag.to_string());
            }
            for v in order.priority() {
                let e = m.exp(*v);
                if e == 1 {
                    factors.push(self.ring.var(*v).to_string());
                } else if e > 1 {
                    factors.push(format!("{}^{}", self.ring.var(*v), e));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with(&self.ring.default_order()))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.add_ref(rhs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.sub_ref(rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.mul_ref(rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::CoeffDomain;

    fn qring() -> Ring {
        Ring::named(&["x", "y"], CoeffDomain::Rational).unwrap()
    }

    #[test]
    fn arithmetic_basics() {
        let r = qring();
        let x = Polynomial::variable(&r, 0);
        let y = Polynomial::variable(&r, 1);
        let p = &(&x + &y) * &(&x - &y);
        let x2 = x.pow(2);
        let y2 = y.pow(2);
        assert_eq!(p, &x2 - &y2);
        assert!((&p - &p).is_zero());
        assert_eq!((&x * &y).num_terms(), 1);
    }

    #[test]
    #[should_panic(expected = "ring mismatch")]
    fn cross_ring_addition_panics() {
        let a = Polynomial::variable(&qring(), 0);
        let other = Ring::named(&["x", "z"], CoeffDomain::Rational).unwrap();
        let b = Polynomial::variable(&other, 1);
        let _ = &a + &b;
    }

    #[test]
    fn checked_binop_reports_mismatch() {
        let a = Polynomial::variable(&qring(), 0);
        let other = Ring::named(&["u"], CoeffDomain::Rational).unwrap();
        let b = Polynomial::variable(&other, 0);
        assert_eq!(
            Polynomial::checked_binop(RingOp::Add, &a, &b),
            Err(Error::RingMismatch)
        );
    }

    #[test]
    fn leading_term_respects_order() {
        let r = qring();
        let x = Polynomial::variable(&r, 0);
        let y = Polynomial::variable(&r, 1);
        let p = &x + &y.pow(3);
        let lex_xy = MonomialOrder::lex_default(2);
        let lex_yx = MonomialOrder::from_priority(vec![1, 0]).unwrap();
        assert_eq!(p.leading_monomial(&lex_xy), Some(&Monomial::var(2, 0)));
        assert_eq!(
            p.leading_monomial(&lex_yx),
            Some(&Monomial::from_exps(vec![0, 3]))
        );
    }

    #[test]
    fn weighted_degree_cases() {
        let vs = crate::variable::VariableSet::named(&["a", "b"]).unwrap();
        let r = Ring::new(vs, CoeffDomain::Rational, Some(Grading::new(vec![2, 1]))).unwrap();
        let g = r.grading().unwrap().clone();
        let a = Polynomial::variable(&r, 0);
        let b = Polynomial::variable(&r, 1);
        let homog = &a + &b.pow(2);
        assert_eq!(homog.weighted_degree(&g), WeightedDegree::Homogeneous(2));
        assert_eq!(
            Polynomial::zero(&r).weighted_degree(&g),
            WeightedDegree::Zero
        );
        match (&a + &b).weighted_degree(&g) {
            WeightedDegree::Inhomogeneous(reps) => {
                assert_eq!(reps.len(), 2);
                assert_eq!(reps[0].0, 1);
                assert_eq!(reps[1].0, 2);
            }
            other => panic!("expected inhomogeneous, got {other:?}"),
        }
    }

    #[test]
    fn top_power_decomposition() {
        let r = qring();
        let x = Polynomial::variable(&r, 0);
        let y = Polynomial::variable(&r, 1);
        // f = x^2*y + x^2 + x + 1, top power in x is 2
        let f = &(&x.pow(2) * &(&y + &Polynomial::one(&r))) + &(&x + &Polynomial::one(&r));
        let (d, q, rem) = f.decompose_top_power(0);
        assert_eq!(d, 2);
        assert_eq!(q, &y + &Polynomial::one(&r));
        assert_eq!(rem, &x + &Polynomial::one(&r));
        let recomposed = &q.mul_term(&Monomial::var(2, 0).pow(2), &r.domain().one()) + &rem;
        assert_eq!(recomposed, f);
        assert_eq!(f.initial_y_form(0).num_terms(), 2);
    }

    #[test]
    fn budgeted_power_reports_blowup() {
        let r = qring();
        let x = Polynomial::variable(&r, 0);
        let y = Polynomial::variable(&r, 1);
        let f = &x + &y;
        assert!(f.pow_budgeted(40, 10).is_err());
        let ok = f.pow_budgeted(3, 10).unwrap();
        assert_eq!(ok.num_terms(), 4);
    }

    #[test]
    fn display_format() {
        let r = qring();
        let x = Polynomial::variable(&r, 0);
        let y = Polynomial::variable(&r, 1);
        let three = Polynomial::from_i64(&r, 3);
        let p = &(&x.pow(2) * &y) - &three;
        assert_eq!(p.to_string(), "x^2*y - 3");
        let q = &(&y - &x) * &three;
        assert_eq!(q.to_string(), "-3*x + 3*y");
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
    }
}
