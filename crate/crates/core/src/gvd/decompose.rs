use crate::error::{Error, Result};
use crate::groebner::{buchberger, Ideal};
use crate::order::MonomialOrder;
use crate::poly::Polynomial;

/// Classification of a geometric vertex decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GvdKind {
    NonDegenerate,
    /// C = ⟨1⟩.
    DegenerateUnitC,
    /// C = N.
    DegenerateEqual,
}

impl GvdKind {
    pub fn is_degenerate(&self) -> bool {
        !matches!(self, GvdKind::NonDegenerate)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GvdChecks {
    /// in_y(I) = C ∩ (N + ⟨y⟩), verified by independent ideal computation.
    pub intersection_identity: bool,
    pub n_inside_i: bool,
    pub n_inside_c: bool,
}

impl GvdChecks {
    pub fn all(&self) -> bool {
        self.intersection_identity && self.n_inside_i && self.n_inside_c
    }
}

/// One geometric vertex decomposition: the data C_{y,I}, N_{y,I} read off
/// a Gröbner basis, with the defining identity checked.
#[derive(Clone, Debug)]
pub struct GvdStep {
    pub y: usize,
    /// The Gröbner basis of I the decomposition was read from.
    pub gb: Vec<Polynomial>,
    pub c_ideal: Ideal,
    pub n_ideal: Ideal,
    /// ⟨in_y(g) : g in the basis⟩.
    pub initial_y_ideal: Ideal,
    pub kind: GvdKind,
    pub checks: GvdChecks,
}

/// Decompose I with respect to the variable y: write each Gröbner basis
/// element as y^d·q + r with q free of y and r of lower y-degree, and form
/// C = ⟨all q⟩ and N = ⟨q with d = 0⟩. The order must pass the sufficient
/// y-compatibility test: y is greatest, under the order, among all
/// variables occurring in the basis.
pub fn gvd_decompose(ideal: &Ideal, y: usize, order: &MonomialOrder) -> Result<GvdStep> {
    let ring = ideal.ring().clone();
    ring.require_field()?;
    let gb = buchberger(ideal.gens(), order)?;
    for g in &gb {
        let support = g.support_vars();
        for (v, present) in support.iter().enumerate() {
            if *present && order.var_cmp(y, v) == std::cmp::Ordering::Less {
                return Err(Error::NotYCompatible(format!(
                    "variable {} occurs in the basis and exceeds y = {}",
                    ring.var(v),
                    ring.var(y)
                )));
            }
        }
    }
    let mut c_gens = Vec::with_capacity(gb.len());
    let mut n_gens = Vec::new();
    let mut init_gens = Vec::with_capacity(gb.len());
    for g in &gb {
        let (d, q, _r) = g.decompose_top_power(y);
        init_gens.push(g.initial_y_form(y));
        if d == 0 {
            n_gens.push(q.clone());
        }
        c_gens.push(q);
    }
    let c_ideal = Ideal::new(&ring, c_gens)?;
    let n_ideal = Ideal::new(&ring, n_gens)?;
    let initial_y_ideal = Ideal::new(&ring, init_gens)?;

    let y_poly = Polynomial::variable(&ring, y);
    let n_plus_y = n_ideal.plus_element(&y_poly)?;
    let rhs = c_ideal.intersection(&n_plus_y, order)?;
    let checks = GvdChecks {
        intersection_identity: initial_y_ideal.equal(&rhs, order)?,
        n_inside_i: ideal.contains_ideal(&n_ideal, order)?,
        n_inside_c: c_ideal.contains_ideal(&n_ideal, order)?,
    };
    let kind = if c_ideal.is_unit(order)? {
        GvdKind::DegenerateUnitC
    } else if c_ideal.equal(&n_ideal, order)? {
        GvdKind::DegenerateEqual
    } else {
        GvdKind::NonDegenerate
    };
    Ok(GvdStep {
        y,
        gb,
        c_ideal,
        n_ideal,
        initial_y_ideal,
        kind,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::CoeffDomain;
    use crate::parse::parse_poly;
    use crate::ring::Ring;

    fn ring_xyz() -> Ring {
        Ring::named(&["x", "y", "z"], CoeffDomain::Rational).unwrap()
    }

    #[test]
    fn monomial_times_variable_plus_rest() {
        // I = <xy + z> decomposed at the variable x (greatest under lex):
        // C = <y>, N = <0>, identity <xy> = <y> ∩ <x>.
        let r = ring_xyz();
        let ord = r.default_order();
        let i = Ideal::new(&r, vec![parse_poly(&r, "x*y + z").unwrap()]).unwrap();
        let step = gvd_decompose(&i, 0, &ord).unwrap();
        assert_eq!(step.kind, GvdKind::NonDegenerate);
        assert!(step.checks.all());
        let c_expect = Ideal::new(&r, vec![parse_poly(&r, "y").unwrap()]).unwrap();
        assert!(step.c_ideal.equal(&c_expect, &ord).unwrap());
        assert!(step.n_ideal.is_zero_ideal());
    }

    #[test]
    fn principal_variable_ideal_is_degenerate_unit() {
        let r = ring_xyz();
        let ord = r.default_order();
        let i = Ideal::new(&r, vec![parse_poly(&r, "x").unwrap()]).unwrap();
        let step = gvd_decompose(&i, 0, &ord).unwrap();
        assert_eq!(step.kind, GvdKind::DegenerateUnitC);
        assert!(step.checks.all());
        assert!(step.n_ideal.is_zero_ideal());
    }

    #[test]
    fn variable_absent_gives_degenerate_equal() {
        let r = ring_xyz();
        let ord = r.default_order();
        let i = Ideal::new(&r, vec![parse_poly(&r, "y + z").unwrap()]).unwrap();
        let step = gvd_decompose(&i, 0, &ord).unwrap();
        assert_eq!(step.kind, GvdKind::DegenerateEqual);
        assert!(step.checks.all());
        assert!(step.c_ideal.equal(&step.n_ideal, &ord).unwrap());
    }

    #[test]
    fn incompatible_order_is_rejected() {
        // decomposing at y while the larger variable x occurs
        let r = ring_xyz();
        let ord = r.default_order();
        let i = Ideal::new(&r, vec![parse_poly(&r, "x + y").unwrap()]).unwrap();
        assert!(matches!(
            gvd_decompose(&i, 1, &ord),
            Err(Error::NotYCompatible(_))
        ));
    }

    #[test]
    fn squarefree_in_y_with_nontrivial_n() {
        // I = <xy + z, z^2 - y>: GB under lex x>y>z adds no x to later
        // elements; N collects the x-free elements.
        let r = ring_xyz();
        let ord = r.default_order();
        let i = Ideal::new(
            &r,
            vec![
                parse_poly(&r, "x*y + z").unwrap(),
                parse_poly(&r, "z^2 - y").unwrap(),
            ],
        )
        .unwrap();
        let step = gvd_decompose(&i, 0, &ord).unwrap();
        assert!(step.checks.n_inside_i && step.checks.n_inside_c);
        assert!(!step.n_ideal.is_zero_ideal());
    }
}
