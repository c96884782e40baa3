use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::Ring;

/// The characteristic of the ring's coefficient field, required prime.
pub fn require_fp(ring: &Ring) -> Result<u64> {
    ring.domain().modulus().ok_or_else(|| {
        Error::Unsupported(format!(
            "operation needs coefficients in a prime field, got {:?}",
            ring.domain()
        ))
    })
}

/// Trace map of the polynomial ring in characteristic p: monomial-wise,
/// x^a ↦ x^((a+1)/p − 1) when every a_i + 1 is divisible by p, and 0
/// otherwise; coefficients pass through unchanged (c = c^p in 𝔽_p).
pub fn trace(g: &Polynomial) -> Result<Polynomial> {
    let ring = g.ring();
    let p = require_fp(ring)?;
    let mut out = Polynomial::zero(ring);
    for (m, c) in g.terms() {
        let mut exps = Vec::with_capacity(m.exps().len());
        let mut divisible = true;
        for &a in m.exps() {
            let a1 = a as u64 + 1;
            if a1 % p != 0 {
                divisible = false;
                break;
            }
            exps.push((a1 / p - 1) as u32);
        }
        if divisible {
            out = &out + &Polynomial::term(ring, Monomial::from_exps(exps), c.clone());
        }
    }
    Ok(out)
}

/// The standard splitting: monomial-wise, x^a ↦ x^(a/p) when every a_i is
/// divisible by p, and 0 otherwise.
pub fn phi_std(g: &Polynomial) -> Result<Polynomial> {
    let ring = g.ring();
    let p = require_fp(ring)?;
    let mut out = Polynomial::zero(ring);
    for (m, c) in g.terms() {
        if m.exps().iter().all(|&a| a as u64 % p == 0) {
            let exps = m.exps().iter().map(|&a| (a as u64 / p) as u32).collect();
            out = &out + &Polynomial::term(ring, Monomial::from_exps(exps), c.clone());
        }
    }
    Ok(out)
}
