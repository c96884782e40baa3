use std::collections::HashSet;

use crate::charts::{chart_var, recursion_family, w0_ring};
use crate::coeff::CoeffDomain;
use crate::error::{Error, Result};
use crate::frob::trace::{require_fp, trace};
use crate::groebner::Ideal;
use crate::gvd::TciWitness;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;

/// Where a splitting element came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// f = ∏ x_i^(p−1), so φ_f is the standard splitting.
    Standard,
    /// f = F_I^(p−1) for a triangular complete intersection I.
    FIPower,
    /// f = F_n^(p−1) for the full chart construction.
    FnPower,
    User,
}

impl Provenance {
    pub fn as_str(&self) -> &'static str {
        match self {
            Provenance::Standard => "standard",
            Provenance::FIPower => "F_I-power",
            Provenance::FnPower => "F_n-power",
            Provenance::User => "user",
        }
    }
}

/// A polynomial f over 𝔽_p defining the candidate splitting
/// φ_f(g) = Tr(f·g). For the power provenances the base g with f = g^(p−1)
/// is retained and its initial term is the product of all ring variables.
#[derive(Clone, Debug)]
pub struct SplittingElement {
    p: u64,
    f: Polynomial,
    provenance: Provenance,
    base: Option<Polynomial>,
}

impl SplittingElement {
    /// The standard splitting element ∏ x_i^(p−1) of an 𝔽_p polynomial ring.
    pub fn standard(ring: &crate::ring::Ring) -> Result<SplittingElement> {
        let p = require_fp(ring)?;
        let n = ring.num_vars();
        let f = Polynomial::term(
            ring,
            Monomial::from_exps(vec![(p - 1) as u32; n]),
            ring.domain().one(),
        );
        let base = Polynomial::term(ring, Monomial::from_exps(vec![1; n]), ring.domain().one());
        Ok(SplittingElement {
            p,
            f,
            provenance: Provenance::Standard,
            base: Some(base),
        })
    }

    /// Build g^(p−1) from a base g (over ℤ or already over 𝔽_p). For the
    /// F-power provenances the invariant in_<(g) = ∏ x_i is enforced.
    pub fn from_base(
        g: &Polynomial,
        p: u64,
        provenance: Provenance,
        order: &MonomialOrder,
        budget: usize,
    ) -> Result<SplittingElement> {
        let gp = reduce_mod_p(g, p)?;
        if provenance != Provenance::User {
            let full = Monomial::from_exps(vec![1; gp.ring().num_vars()]);
            if gp.leading_monomial(order) != Some(&full) {
                return Err(Error::UnitCheckFailed(format!(
                    "base initial term is not the product of all variables for {} provenance",
                    provenance.as_str()
                )));
            }
        }
        let f = gp.pow_budgeted((p - 1) as u32, budget)?;
        Ok(SplittingElement {
            p,
            f,
            provenance,
            base: Some(gp),
        })
    }

    /// Wrap an arbitrary f over 𝔽_p with user provenance.
    pub fn from_user(f: &Polynomial) -> Result<SplittingElement> {
        let p = require_fp(f.ring())?;
        Ok(SplittingElement {
            p,
            f: f.clone(),
            provenance: Provenance::User,
            base: None,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn base(&self) -> Option<&Polynomial> {
        self.base.as_ref()
    }

    /// φ_f(1) = Tr(f); equal to 1 exactly when φ_f fixes 1.
    pub fn unit_check(&self) -> Result<bool> {
        Ok(trace(&self.f)?.is_one())
    }
}

/// φ_f(g) = Tr(f·g).
pub fn phi_f(s: &SplittingElement, g: &Polynomial) -> Result<Polynomial> {
    if !g.ring().same_ring(s.f.ring()) {
        return Err(Error::RingMismatch);
    }
    trace(&(&s.f * g))
}

/// Reduce a polynomial over ℤ or ℚ into the same variables over 𝔽_p
/// (denominators are inverted; a denominator divisible by p is an error).
/// A polynomial already over 𝔽_p must match the requested prime.
pub fn reduce_mod_p(g: &Polynomial, p: u64) -> Result<Polynomial> {
    let domain = CoeffDomain::prime(p)?;
    match g.ring().domain() {
        CoeffDomain::Prime(q) if *q == p => Ok(g.clone()),
        CoeffDomain::Prime(q) => Err(Error::Unsupported(format!(
            "polynomial lives over F_{q}, requested F_{p}"
        ))),
        _ => g.map_domain(&g.ring().with_domain(domain)),
    }
}

/// Outcome of the unit test for a candidate splitting base g: whether
/// Tr(g^(p−1)) = 1 (the defining property of a splitting on 1), and whether
/// the sufficient hypothesis in_<(g) = ∏ x_i held.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitUnitReport {
    pub p: u64,
    pub lead_is_full_product: bool,
    pub trace_of_power_is_one: bool,
}

impl SplitUnitReport {
    pub fn passed(&self) -> bool {
        self.trace_of_power_is_one
    }
}

/// Compute g^(p−1) exactly and test Tr(g^(p−1)) = 1, reporting alongside
/// whether the initial term of g is the product of all ring variables.
pub fn splitting_unit_check(
    g: &Polynomial,
    order: &MonomialOrder,
    p: u64,
    budget: usize,
) -> Result<SplitUnitReport> {
    let gp = reduce_mod_p(g, p)?;
    let full = Monomial::from_exps(vec![1; gp.ring().num_vars()]);
    let lead_is_full_product = gp.leading_monomial(order) == Some(&full);
    let f = gp.pow_budgeted((p - 1) as u32, budget)?;
    Ok(SplitUnitReport {
        p,
        lead_is_full_product,
        trace_of_power_is_one: trace(&f)?.is_one(),
    })
}

/// The splitting base for a triangular complete intersection:
/// F_I = (∏ of the variables that are not lead variables)·(∏_j u_j^(−1)·f_j).
/// Its initial term is verified to be the product of all ring variables
/// with coefficient 1.
pub fn build_f_i(witness: &TciWitness) -> Result<Polynomial> {
    let ring = witness.ring().clone();
    ring.require_field()?;
    let order = witness.order();
    let lead: HashSet<usize> = witness.lead_vars().iter().copied().collect();
    let mut f = Polynomial::one(&ring);
    for v in 0..ring.num_vars() {
        if !lead.contains(&v) {
            f = &f * &Polynomial::variable(&ring, v);
        }
    }
    let domain = ring.domain().clone();
    let unit_monomial = Monomial::one(ring.num_vars());
    for (g, u) in witness.generators().iter().zip(witness.units()) {
        let inv = domain.div(&domain.one(), u)?;
        f = &f * &g.mul_term(&unit_monomial, &inv);
    }
    verify_full_product_lead(&f, order, "F_I")?;
    Ok(f)
}

/// The chart-wide splitting base over ℤ:
/// F_n = (−1)^((n−1)(n−2)/2)·(∏_{i<n} x_{i,1})·(∏_{k>ℓ+1} f_{k,ℓ}),
/// the generator product taken over the full staircase ℓ+1 < k ≤ n.
/// The initial term is verified to be the product of all chart variables
/// with coefficient +1.
pub fn build_f_n(n: usize) -> Result<Polynomial> {
    if n < 3 {
        return Err(Error::IndexOutOfRange(format!(
            "splitting base construction needs n >= 3, got {n}"
        )));
    }
    let ring = w0_ring(n, CoeffDomain::Integer)?;
    let family = recursion_family(&ring, n)?;
    let mut f = if ((n - 1) * (n - 2) / 2) % 2 == 1 {
        -&Polynomial::one(&ring)
    } else {
        Polynomial::one(&ring)
    };
    for i in 1..n {
        f = &f * &chart_var(&ring, i, 1)?;
    }
    for l in 1..n {
        for k in (l + 2)..=n {
            let gen = family
                .get(&(k, l))
                .ok_or_else(|| Error::IndexOutOfRange(format!("entry ({k},{l})")))?;
            f = &f * gen;
        }
    }
    verify_full_product_lead(&f, &ring.default_order(), "F_n")?;
    Ok(f)
}

fn verify_full_product_lead(
    f: &Polynomial,
    order: &MonomialOrder,
    label: &str,
) -> Result<()> {
    let full = Monomial::from_exps(vec![1; f.ring().num_vars()]);
    match f.leading_term(order) {
        Some((lm, lc)) if *lm == full && lc.is_one() => Ok(()),
        _ => Err(Error::CheckFailed {
            context: format!("{label} construction"),
            check: "initial term equals the product of all variables with coefficient 1".into(),
        }),
    }
}

/// The Frobenius power I^[p] = ⟨g^p : g a generator⟩ over 𝔽_p.
pub fn frobenius_power(ideal: &Ideal, p: u64) -> Result<Ideal> {
    let ring = ideal.ring();
    let q = require_fp(ring)?;
    if q != p {
        return Err(Error::Unsupported(format!(
            "ideal lives over F_{q}, requested Frobenius power for p = {p}"
        )));
    }
    let gens = ideal.gens().iter().map(|g| g.pow(p as u32)).collect();
    Ideal::new(ring, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charts::{hess_generators, HessenbergFunction, Permutation};
    use crate::groebner::coprime_leads_gb_check;
    use crate::gvd::{detect_tci, TciOutcome};
    use crate::parse::parse_poly;
    use crate::ring::Ring;
    use crate::sample::{random_poly, rng_from_seed};

    #[test]
    fn f3_is_the_explicit_product() {
        let f3 = build_f_n(3).unwrap();
        let ring = f3.ring();
        let expect = parse_poly(ring, "x[1,1]*x[1,2]*x[2,1] - x[1,1]*x[2,1]^2").unwrap();
        assert_eq!(f3, expect);
        let order = ring.default_order();
        assert_eq!(
            f3.leading_monomial(&order).unwrap(),
            &Monomial::from_exps(vec![1, 1, 1])
        );
    }

    #[test]
    fn f_n_degree_and_unit_lead() {
        // degree = (n−1) + Σ_{k>ℓ+1} (k−ℓ−1); the build itself asserts the
        // initial-term law, exercised here for n = 3..6.
        for n in 3..=6usize {
            let f = build_f_n(n).unwrap();
            let mut deg = (n - 1) as u64;
            for l in 1..n {
                for k in (l + 2)..=n {
                    deg += (k - l - 1) as u64;
                }
            }
            assert_eq!(f.total_degree(), Some(deg), "n = {n}");
        }
    }

    #[test]
    fn f_i_from_triangular_witness() {
        let n = 4;
        let h = HessenbergFunction::new(vec![2, 3, 4, 4]).unwrap();
        let patch = hess_generators(n, &Permutation::w0(n), &h, CoeffDomain::Rational).unwrap();
        let order = patch.ring().default_order();
        let outcome = detect_tci(&patch.generators(), &order).unwrap();
        let witness = match outcome {
            TciOutcome::Triangular(w) => w,
            _ => panic!("patch generators are triangular"),
        };
        let fi = build_f_i(&witness).unwrap();
        let full = Monomial::from_exps(vec![1; 6]);
        assert_eq!(fi.leading_monomial(&order), Some(&full));
        assert!(fi.leading_coeff(&order).unwrap().is_one());
    }

    #[test]
    fn unit_check_examples() {
        let r = Ring::named(&["x", "y"], CoeffDomain::Rational).unwrap();
        let order = r.default_order();
        let g = parse_poly(&r, "x*y + x").unwrap();
        let rep = splitting_unit_check(&g, &order, 3, 1 << 20).unwrap();
        assert!(rep.lead_is_full_product);
        assert!(rep.trace_of_power_is_one);
        // hypothesis failure is reported, not an error
        let bad = parse_poly(&r, "x").unwrap();
        let rep2 = splitting_unit_check(&bad, &order, 2, 1 << 20).unwrap();
        assert!(!rep2.lead_is_full_product);
        assert!(!rep2.trace_of_power_is_one);
    }

    #[test]
    fn standard_element_matches_phi_std() {
        use crate::frob::trace::phi_std;
        for p in [2u64, 3] {
            let r = Ring::named(&["x", "y", "z"], CoeffDomain::Prime(p)).unwrap();
            let s = SplittingElement::standard(&r).unwrap();
            assert!(s.unit_check().unwrap());
            let mut rng = rng_from_seed(42 + p);
            for _ in 0..300 {
                let g = random_poly(&mut rng, &r, 5, 5, 0);
                assert_eq!(phi_f(&s, &g).unwrap(), phi_std(&g).unwrap());
            }
        }
    }

    #[test]
    fn frobenius_power_char_two() {
        let r = Ring::named(&["x", "y"], CoeffDomain::Prime(2)).unwrap();
        let i = Ideal::new(&r, vec![parse_poly(&r, "x - y").unwrap()]).unwrap();
        let ip = frobenius_power(&i, 2).unwrap();
        assert_eq!(ip.gens(), &[parse_poly(&r, "x^2 + y^2").unwrap()]);
        // I^[p] ⊆ I
        let order = r.default_order();
        assert!(i.contains_ideal(&ip, &order).unwrap());
        // wrong prime is rejected
        assert!(frobenius_power(&i, 3).is_err());
    }

    #[test]
    fn patch_frobenius_power_keeps_coprime_leads() {
        let h = HessenbergFunction::new(vec![2, 3, 4, 5, 5]).unwrap();
        let patch =
            hess_generators(5, &Permutation::w0(5), &h, CoeffDomain::Prime(2)).unwrap();
        let order = patch.ring().default_order();
        let ideal = patch.ideal();
        let ip = frobenius_power(&ideal, 2).unwrap();
        assert!(coprime_leads_gb_check(ip.gens(), &order).unwrap());
    }

    #[test]
    fn from_base_enforces_lead_invariant() {
        let r = Ring::named(&["x", "y"], CoeffDomain::Rational).unwrap();
        let order = r.default_order();
        let bad = parse_poly(&r, "x + y").unwrap();
        assert!(matches!(
            SplittingElement::from_base(&bad, 2, Provenance::FnPower, &order, 1 << 20),
            Err(Error::UnitCheckFailed(_))
        ));
        let good = parse_poly(&r, "x*y + y").unwrap();
        let s = SplittingElement::from_base(&good, 3, Provenance::User, &order, 1 << 20).unwrap();
        assert_eq!(s.p(), 3);
        assert_eq!(s.f().total_degree(), Some(4));
    }
}
