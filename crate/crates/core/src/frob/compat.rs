use crate::error::{Error, Result};
use crate::frob::split::{frobenius_power, phi_f, SplittingElement};
use crate::groebner::{normal_form, Ideal};
use crate::order::MonomialOrder;
use crate::sample::{random_monomial_bounded, rng_from_seed};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampledChecks {
    pub count: u64,
    pub failures: u64,
}

/// Result of testing that φ_f maps an ideal into itself.
///
/// `frob_power_membership` is the sufficient criterion f·g state ∈ I^[p]
/// for every generator g (it implies φ_f(I) ⊆ I because Tr maps I^[p]·R
/// into I); `sampled` corroborates by reducing φ_f(m·g) against a Gröbner
/// basis of I for seeded random monomials m.
#[derive(Clone, Debug)]
pub struct CompatReport {
    pub frob_power_membership: bool,
    pub per_generator: Vec<bool>,
    pub sampled: SampledChecks,
    pub seed: u64,
}

impl CompatReport {
    pub fn passed(&self) -> bool {
        self.frob_power_membership
    }
}

/// Certify that the splitting φ_f with f = s.f() compatibly splits `ideal`:
/// check f·g ∈ I^[p] for every generator g, then corroborate with
/// `samples_per_generator` random monomials m of per-variable exponent < p
/// and total degree ≤ deg(f·g)/p + `degree_margin`, testing that φ_f(m·g)
/// reduces to zero modulo I. The unit check Tr(f) = 1 is a precondition.
pub fn compat_check(
    s: &SplittingElement,
    ideal: &Ideal,
    order: &MonomialOrder,
    seed: u64,
    samples_per_generator: u64,
    degree_margin: u64,
) -> Result<CompatReport> {
    let ring = ideal.ring();
    if !ring.same_ring(s.f().ring()) {
        return Err(Error::RingMismatch);
    }
    if !s.unit_check()? {
        return Err(Error::UnitCheckFailed(
            "Tr(f) != 1: not a splitting candidate".into(),
        ));
    }
    let p = s.p();
    let frob = frobenius_power(ideal, p)?;
    let frob_gb = frob.groebner_basis(order)?;
    let mut per_generator = Vec::with_capacity(ideal.gens().len());
    for g in ideal.gens() {
        let prod = s.f() * g;
        per_generator.push(normal_form(&prod, &frob_gb, order)?.is_zero());
    }
    let frob_power_membership = per_generator.iter().all(|&b| b);

    let ideal_gb = ideal.groebner_basis(order)?;
    let mut rng = rng_from_seed(seed);
    let mut count = 0u64;
    let mut failures = 0u64;
    let deg_f = s.f().total_degree().unwrap_or(0);
    for g in ideal.gens() {
        let bound = (deg_f + g.total_degree().unwrap_or(0)) / p + degree_margin;
        for _ in 0..samples_per_generator {
            let m = random_monomial_bounded(&mut rng, ring, p as u32, bound);
            let sample = g.mul_term(&m, &ring.domain().one());
            let image = phi_f(s, &sample)?;
            count += 1;
            if !normal_form(&image, &ideal_gb, order)?.is_zero() {
                failures += 1;
            }
        }
    }

    Ok(CompatReport {
        frob_power_membership,
        per_generator,
        sampled: SampledChecks { count, failures },
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charts::{hess_generators, HessenbergFunction, Permutation};
    use crate::coeff::CoeffDomain;
    use crate::frob::split::{build_f_n, Provenance};
    use crate::parse::parse_poly;
    use crate::ring::Ring;

    #[test]
    fn smallest_patch_is_compatibly_split() {
        // n=3, p=2, I = <x21 - x12>: F_3·(x21 - x12) = -x11·x21·(x21 - x12)^2
        // lies in I^[2].
        let h = HessenbergFunction::new(vec![2, 3, 3]).unwrap();
        let patch =
            hess_generators(3, &Permutation::w0(3), &h, CoeffDomain::Prime(2)).unwrap();
        let ideal = patch.ideal();
        let order = patch.ring().default_order();
        let f3 = build_f_n(3).unwrap();
        let s =
            SplittingElement::from_base(&f3, 2, Provenance::FnPower, &order, 1 << 20).unwrap();
        let rep = compat_check(&s, &ideal, &order, 7, 20, 2).unwrap();
        assert!(rep.frob_power_membership);
        assert_eq!(rep.per_generator, vec![true]);
        assert_eq!(rep.sampled.failures, 0);
        assert_eq!(rep.sampled.count, 20);
    }

    #[test]
    fn standard_splitting_rejects_inhomogeneous_principal_ideal() {
        let r = Ring::named(&["x"], CoeffDomain::Prime(2)).unwrap();
        let order = r.default_order();
        let ideal = Ideal::new(&r, vec![parse_poly(&r, "x + 1").unwrap()]).unwrap();
        let s = SplittingElement::standard(&r).unwrap();
        let rep = compat_check(&s, &ideal, &order, 11, 8, 1).unwrap();
        assert!(!rep.frob_power_membership);
        assert!(rep.sampled.failures > 0);
    }

    #[test]
    fn zero_ideal_is_trivially_split() {
        let r = Ring::named(&["x", "y"], CoeffDomain::Prime(3)).unwrap();
        let order = r.default_order();
        let ideal = Ideal::zero(&r);
        let s = SplittingElement::standard(&r).unwrap();
        let rep = compat_check(&s, &ideal, &order, 1, 5, 1).unwrap();
        assert!(rep.frob_power_membership);
        assert_eq!(rep.sampled.count, 0);
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let r2 = Ring::named(&["x"], CoeffDomain::Prime(2)).unwrap();
        let r3 = Ring::named(&["x"], CoeffDomain::Prime(3)).unwrap();
        let ideal = Ideal::new(&r3, vec![parse_poly(&r3, "x").unwrap()]).unwrap();
        let s = SplittingElement::standard(&r2).unwrap();
        let order = r3.default_order();
        assert!(matches!(
            compat_check(&s, &ideal, &order, 0, 1, 0),
            Err(Error::RingMismatch)
        ));
    }
}
