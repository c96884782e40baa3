use crate::error::Result;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;

/// Multivariate division with remainder: writes
/// `f = q[0]*divisors[0] + ... + q[k]*divisors[k] + r`
/// where no term of `r` is divisible by any divisor's leading monomial.
/// Divisors are tried in list order at every step, so the result is
/// deterministic. Zero divisors are skipped. Requires field coefficients.
pub fn divide(
    f: &Polynomial,
    divisors: &[Polynomial],
    order: &MonomialOrder,
) -> Result<(Vec<Polynomial>, Polynomial)> {
    let ring = f.ring().clone();
    ring.require_field()?;
    let domain = ring.domain().clone();
    let mut quotients = vec![Polynomial::zero(&ring); divisors.len()];
    let mut remainder = Polynomial::zero(&ring);
    let mut p = f.clone();
    'outer: while !p.is_zero() {
        let (lm, lc) = {
            let (m, c) = p.leading_term(order).unwrap();
            (m.clone(), c.clone())
        };
        for (i, d) in divisors.iter().enumerate() {
            if d.is_zero() {
                continue;
            }
            let (dm, dc) = d.leading_term(order).unwrap();
            if let Some(q) = lm.try_div(dm) {
                let qc = domain.div(&lc, dc)?;
                let t = Polynomial::term(&ring, q.clone(), qc.clone());
                quotients[i] = &quotients[i] + &t;
                p = &p - &d.mul_term(&q, &qc);
                continue 'outer;
            }
        }
        let t = Polynomial::term(&ring, lm, lc);
        remainder = &remainder + &t;
        p = &p - &t;
    }
    Ok((quotients, remainder))
}

/// Remainder of `f` on division by `g` (in list order) under `order`.
pub fn normal_form(
    f: &Polynomial,
    g: &[Polynomial],
    order: &MonomialOrder,
) -> Result<Polynomial> {
    Ok(divide(f, g, order)?.1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::CoeffDomain;
    use crate::parse::parse_poly;
    use crate::ring::Ring;

    fn ring_xy() -> Ring {
        Ring::named(&["x", "y"], CoeffDomain::Rational).unwrap()
    }

    #[test]
    fn division_identity_holds() {
        let r = ring_xy();
        let ord = r.default_order();
        let f = parse_poly(&r, "x^2*y + x*y^2 + y^2").unwrap();
        let d1 = parse_poly(&r, "x*y - 1").unwrap();
        let d2 = parse_poly(&r, "y^2 - 1").unwrap();
        let (q, rem) = divide(&f, &[d1.clone(), d2.clone()], &ord).unwrap();
        let recombined = &(&(&q[0] * &d1) + &(&q[1] * &d2)) + &rem;
        assert_eq!(recombined, f);
        assert_eq!(rem, parse_poly(&r, "x + y + 1").unwrap());
    }

    #[test]
    fn remainder_terms_are_irreducible() {
        let r = ring_xy();
        let ord = r.default_order();
        let f = parse_poly(&r, "x^3*y^2 + x^2*y + x + 5").unwrap();
        let d1 = parse_poly(&r, "x*y - 1").unwrap();
        let d2 = parse_poly(&r, "y^2 - 1").unwrap();
        let divisors = [d1, d2];
        let (_, rem) = divide(&f, &divisors, &ord).unwrap();
        for (m, _) in rem.terms() {
            for d in &divisors {
                assert!(!d.leading_monomial(&ord).unwrap().divides(m));
            }
        }
    }

    #[test]
    fn single_unit_lead_divisor() {
        let r = ring_xy();
        let ord = r.default_order();
        let g = parse_poly(&r, "x + y^2").unwrap();
        let f = parse_poly(&r, "x^2 + x*y^2").unwrap();
        let nf = normal_form(&f, &[g], &ord).unwrap();
        assert!(nf.is_zero());
    }

    #[test]
    fn integer_ring_rejected() {
        let zr = Ring::named(&["x"], CoeffDomain::Integer).unwrap();
        let f = parse_poly(&zr, "x^2").unwrap();
        let g = parse_poly(&zr, "x").unwrap();
        assert!(normal_form(&f, &[g], &zr.default_order()).is_err());
    }
}
