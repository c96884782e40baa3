//! Seeded random sampling of coefficients, monomials, and polynomials.
//!
//! All randomized checks in the library and its tests draw from a
//! `ChaCha8Rng` with an explicitly recorded seed so every run is
//! reproducible.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coeff::Coeff;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::Ring;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_coeff(rng: &mut ChaCha8Rng, ring: &Ring, bound: i64) -> Coeff {
    let d = ring.domain();
    match d.modulus() {
        Some(p) => Coeff::Fp(rng.gen_range(0..p)),
        None => d.from_i64(rng.gen_range(-bound..=bound)),
    }
}

/// A monomial with each exponent drawn uniformly from 0..=max_exp.
pub fn random_monomial(rng: &mut ChaCha8Rng, ring: &Ring, max_exp: u32) -> Monomial {
    Monomial::from_exps(
        (0..ring.num_vars())
            .map(|_| rng.gen_range(0..=max_exp))
            .collect(),
    )
}

/// A monomial with per-variable exponents < `exp_bound` and total degree at
/// most `max_total`, drawn by rejection.
pub fn random_monomial_bounded(
    rng: &mut ChaCha8Rng,
    ring: &Ring,
    exp_bound: u32,
    max_total: u64,
) -> Monomial {
    loop {
        let m = Monomial::from_exps(
            (0..ring.num_vars())
                .map(|_| rng.gen_range(0..exp_bound.max(1)))
                .collect(),
        );
        if m.total_degree() <= max_total {
            return m;
        }
    }
}

pub fn random_poly(
    rng: &mut ChaCha8Rng,
    ring: &Ring,
    max_terms: usize,
    max_exp: u32,
    coeff_bound: i64,
) -> Polynomial {
    let n_terms = rng.gen_range(0..=max_terms);
    let mut p = Polynomial::zero(ring);
    for _ in 0..n_terms {
        let m = random_monomial(rng, ring, max_exp);
        let c = random_coeff(rng, ring, coeff_bound);
        p = &p + &Polynomial::term(ring, m, c);
    }
    p
}

/// Like [`random_poly`] but guaranteed nonzero.
pub fn random_poly_nonzero(
    rng: &mut ChaCha8Rng,
    ring: &Ring,
    max_terms: usize,
    max_exp: u32,
    coeff_bound: i64,
) -> Polynomial {
    loop {
        let p = random_poly(rng, ring, max_terms.max(1), max_exp, coeff_bound);
        if !p.is_zero() {
            return p;
        }
    }
}
