use serde_json::json;

use crate::charts::{
    chain_ideal, hbar, hess_generators, mu, relabel_down, w0_ring, HessenbergFunction, Permutation,
};
use crate::coeff::CoeffDomain;
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::gvd::decompose::{gvd_decompose, GvdKind};
use crate::poly::Polynomial;

/// How a certified decomposition chain bottoms out.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseCase {
    ZeroIdeal,
    Indeterminates,
}

impl BaseCase {
    pub fn as_str(&self) -> &'static str {
        match self {
            BaseCase::ZeroIdeal => "zero_ideal",
            BaseCase::Indeterminates => "indeterminates",
        }
    }
}

/// Named boolean results for one chain step. All must hold for the
/// certificate to be issued; a failure aborts certification with an error.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StepChecks {
    /// Every generator of I(m) has y-degree at most one.
    pub squarefree: bool,
    /// The reduced Gröbner basis of N = I(m+1) contains no y.
    pub gb_y_free: bool,
    /// The witness f has in_y(f) = y: y occurs linearly with unit coefficient.
    pub unit_y_coeff: bool,
    /// (N : f) = N, so f is a nonzerodivisor modulo N.
    pub nzd_colon: bool,
    /// I(m) = N + ⟨f⟩.
    pub sum_decomposition: bool,
    /// in_y(I(m)) = C ∩ (N + ⟨y⟩), with C = ⟨1⟩ and N = I(m+1).
    pub intersection_identity: bool,
    /// Generator count of I(m) equals the codimension of its initial ideal.
    pub complete_intersection: bool,
}

impl StepChecks {
    pub fn all(&self) -> bool {
        self.squarefree
            && self.gb_y_free
            && self.unit_y_coeff
            && self.nzd_colon
            && self.sum_decomposition
            && self.intersection_identity
            && self.complete_intersection
    }
}

/// Record of one geometric vertex decomposition in the chain.
#[derive(Clone, Debug)]
pub struct ChainStepReport {
    /// Matrix size at which this step was performed (decreases on relabel).
    pub level_n: usize,
    pub m: usize,
    /// Printed name of the decomposition variable y_m.
    pub y: String,
    /// Printed witness polynomial f with I(m) = I(m+1) + ⟨f⟩ and in_y(f) = y.
    pub witness: String,
    pub kind: GvdKind,
    pub checks: StepChecks,
}

/// Full certificate that the w0-chart patch ideal of (n, h) is geometrically
/// vertex decomposable, produced by the explicit one-variable-at-a-time chain
/// followed by relabeling to the same family one size down.
#[derive(Clone, Debug)]
pub struct GvdCertificate {
    pub n: usize,
    pub h: HessenbergFunction,
    pub steps: Vec<ChainStepReport>,
    pub base_case: BaseCase,
    /// Number of relabeling descents performed before the base case.
    pub relabel_depth: usize,
}

impl GvdCertificate {
    pub fn to_json(&self) -> serde_json::Value {
        let steps: Vec<serde_json::Value> = self
            .steps
            .iter()
            .map(|s| {
                json!({
                    "m": s.m,
                    "y": s.y,
                    "witness": s.witness,
                    "checks": {
                        "squarefree": s.checks.squarefree,
                        "gb_y_free": s.checks.gb_y_free,
                        "unit_y_coeff": s.checks.unit_y_coeff,
                        "nzd_colon": s.checks.nzd_colon,
                        "sum_decomposition": s.checks.sum_decomposition,
                        "intersection_identity": s.checks.intersection_identity,
                        "complete_intersection": s.checks.complete_intersection,
                    },
                    "kind": if s.kind.is_degenerate() { "degenerate" } else { "non-degenerate" },
                })
            })
            .collect();
        json!({
            "n": self.n,
            "h": self.h.to_string(),
            "steps": steps,
            "terminal": {
                "base_case": self.base_case.as_str(),
                "relabel_depth": self.relabel_depth,
            },
        })
    }
}

fn check_failed(n: usize, h: &HessenbergFunction, m: usize, check: &str) -> Error {
    Error::CheckFailed {
        context: format!("n={n} h={h} chain step m={m}"),
        check: check.to_string(),
    }
}

/// True iff every generator is a nonzero constant multiple of a variable.
fn generated_by_indeterminates(ideal: &Ideal) -> bool {
    !ideal.gens().is_empty()
        && ideal.gens().iter().all(|g| {
            g.num_terms() == 1
                && g.terms()
                    .next()
                    .is_some_and(|(m, _)| m.single_var().is_some())
        })
}

/// Certify that the patch ideal of (n, h) on the w0 chart is geometrically
/// vertex decomposable by running the explicit degenerate chain
/// y_m = x[1, m+2] for m = 0..μ(h), then relabeling the residual ideal to
/// the (n−1)-sized family and recursing. Every claimed equality is verified
/// by Gröbner computation; the first failure aborts with a check error.
pub fn certify_w0_chain(n: usize, h: &HessenbergFunction) -> Result<GvdCertificate> {
    if n < 3 {
        return Err(Error::InvalidHessenberg(format!(
            "chain certification needs n >= 3, got {n}"
        )));
    }
    if h.n() != n {
        return Err(Error::InvalidHessenberg(format!(
            "h has length {} but n = {n}",
            h.n()
        )));
    }
    if !h.is_indecomposable() {
        return Err(Error::NotIndecomposable(format!(
            "h = {h} has h(i) = i at some i < n"
        )));
    }
    if h.is_trivial() {
        // The patch ideal is the zero ideal: nothing to decompose.
        return Ok(GvdCertificate {
            n,
            h: h.clone(),
            steps: Vec::new(),
            base_case: BaseCase::ZeroIdeal,
            relabel_depth: 0,
        });
    }

    let w0 = Permutation::w0(n);
    let patch = hess_generators(n, &w0, h, CoeffDomain::Rational)?;
    let ring = patch.ring().clone();
    let order = ring.default_order();
    let depth = mu(h)?;

    let mut steps = Vec::new();
    for m in 0..depth {
        let i_m = chain_ideal(&patch, m)?;
        let i_next = chain_ideal(&patch, m + 1)?;
        let y_var = crate::variable::Variable::chart(1, (m + 2) as u32);
        let y = ring
            .var_index(&y_var)
            .ok_or_else(|| Error::UnknownVariable(y_var.to_string()))?;
        // Witness: the unique generator of I(m) containing y, negated so
        // that y appears with coefficient +1.
        let witness = -patch.generator_at(n, m + 1)?;

        let squarefree = i_m.gens().iter().all(|g| g.max_exp_of(y) <= 1);
        if !squarefree {
            return Err(check_failed(n, h, m, "squarefree"));
        }

        let n_gb = i_next.groebner_basis(&order)?;
        let n_gb_reduced = crate::groebner::autoreduce(&n_gb, &order)?;
        let gb_y_free = n_gb_reduced.iter().all(|g| !g.contains_var(y));
        if !gb_y_free {
            return Err(check_failed(n, h, m, "gb_y_free"));
        }

        let (d, q, _r) = witness.decompose_top_power(y);
        let unit_y_coeff = d == 1 && q.is_one();
        if !unit_y_coeff {
            return Err(check_failed(n, h, m, "unit_y_coeff"));
        }

        let nzd_colon = i_next.quotient(&witness, &order)?.equal(&i_next, &order)?;
        if !nzd_colon {
            return Err(check_failed(n, h, m, "nzd_colon"));
        }

        let sum_decomposition = i_next.plus_element(&witness)?.equal(&i_m, &order)?;
        if !sum_decomposition {
            return Err(check_failed(n, h, m, "sum_decomposition"));
        }

        let step = gvd_decompose(&i_m, y, &order)?;
        if step.kind != GvdKind::DegenerateUnitC {
            return Err(check_failed(n, h, m, "degenerate_unit_c"));
        }
        if !step.n_ideal.equal(&i_next, &order)? {
            return Err(check_failed(n, h, m, "n_equals_next_chain_ideal"));
        }
        let intersection_identity = step.checks.all();
        if !intersection_identity {
            return Err(check_failed(n, h, m, "intersection_identity"));
        }

        let complete_intersection =
            i_m.initial_ideal(&order)?.codimension()? == i_m.gens().len();
        if !complete_intersection {
            return Err(check_failed(n, h, m, "complete_intersection"));
        }

        steps.push(ChainStepReport {
            level_n: n,
            m,
            y: ring.var(y).to_string(),
            witness: witness.to_string(),
            kind: step.kind,
            checks: StepChecks {
                squarefree,
                gb_y_free,
                unit_y_coeff,
                nzd_colon,
                sum_decomposition,
                intersection_identity,
                complete_intersection,
            },
        });
    }

    let residual = chain_ideal(&patch, depth)?;
    if residual.is_zero_ideal() {
        return Ok(GvdCertificate {
            n,
            h: h.clone(),
            steps,
            base_case: BaseCase::ZeroIdeal,
            relabel_depth: 0,
        });
    }
    if generated_by_indeterminates(&residual) {
        return Ok(GvdCertificate {
            n,
            h: h.clone(),
            steps,
            base_case: BaseCase::Indeterminates,
            relabel_depth: 0,
        });
    }

    // Residual ideal: relabel rows down by one and identify it with the
    // patch ideal of (n−1, h̄) before recursing.
    if n - 1 < 3 {
        return Err(Error::CheckFailed {
            context: format!("n={n} h={h} residual after the chain"),
            check: "residual ideal nonzero at the smallest size".into(),
        });
    }
    let hb = hbar(h)?;
    let target = w0_ring(n - 1, CoeffDomain::Rational)?;
    let relabeled: Vec<Polynomial> = residual
        .gens()
        .iter()
        .map(|g| relabel_down(g, &target))
        .collect::<Result<_>>()?;
    let smaller = hess_generators(n - 1, &Permutation::w0(n - 1), &hb, CoeffDomain::Rational)?;
    let expected = smaller.generators();
    if relabeled.len() != expected.len()
        || relabeled.iter().zip(expected.iter()).any(|(a, b)| a != b)
    {
        return Err(Error::CheckFailed {
            context: format!("n={n} h={h} relabeling to n={} h̄={hb}", n - 1),
            check: "relabeled residual generators match the smaller family".into(),
        });
    }
    let sub = certify_w0_chain(n - 1, &hb)?;
    steps.extend(sub.steps);
    Ok(GvdCertificate {
        n,
        h: h.clone(),
        steps,
        base_case: sub.base_case,
        relabel_depth: sub.relabel_depth + 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charts::HessenbergFunction;

    fn hf(vals: &[usize]) -> HessenbergFunction {
        HessenbergFunction::new(vals.to_vec()).unwrap()
    }

    #[test]
    fn smallest_nontrivial_chain() {
        // h = (2,3,3): one generator, one step, empty residual.
        let cert = certify_w0_chain(3, &hf(&[2, 3, 3])).unwrap();
        assert_eq!(cert.steps.len(), 1);
        assert_eq!(cert.steps[0].y, "x[1,2]");
        assert_eq!(cert.base_case, BaseCase::ZeroIdeal);
        assert_eq!(cert.relabel_depth, 0);
        assert!(cert.steps[0].checks.all());
    }

    #[test]
    fn full_function_has_no_steps() {
        let cert = certify_w0_chain(3, &hf(&[3, 3, 3])).unwrap();
        assert!(cert.steps.is_empty());
        assert_eq!(cert.base_case, BaseCase::ZeroIdeal);
    }

    #[test]
    fn banded_function_recurses_through_relabeling() {
        // h = (2,3,4,4): two steps at size four, then the residual relabels
        // to (2,3,3) at size three for one more step.
        let cert = certify_w0_chain(4, &hf(&[2, 3, 4, 4])).unwrap();
        assert_eq!(cert.relabel_depth, 1);
        assert_eq!(cert.steps.len(), 3);
        assert_eq!(
            cert.steps.iter().map(|s| s.level_n).collect::<Vec<_>>(),
            vec![4, 4, 3]
        );
        assert_eq!(
            cert.steps.iter().map(|s| s.y.as_str()).collect::<Vec<_>>(),
            vec!["x[1,2]", "x[1,3]", "x[1,2]"]
        );
        assert!(cert.steps.iter().all(|s| s.checks.all()));
        assert!(cert.steps.iter().all(|s| s.kind.is_degenerate()));
    }

    #[test]
    fn json_shape() {
        let cert = certify_w0_chain(3, &hf(&[2, 3, 3])).unwrap();
        let v = cert.to_json();
        assert_eq!(v["n"], 3);
        assert_eq!(v["h"], "(2,3,3)");
        assert_eq!(v["steps"][0]["y"], "x[1,2]");
        assert_eq!(v["steps"][0]["kind"], "degenerate");
        assert_eq!(v["steps"][0]["checks"]["nzd_colon"], true);
        assert_eq!(v["terminal"]["base_case"], "zero_ideal");
        assert_eq!(v["terminal"]["relabel_depth"], 0);
    }

    #[test]
    fn rejects_decomposable_function() {
        assert!(matches!(
            certify_w0_chain(3, &hf(&[1, 3, 3])),
            Err(Error::NotIndecomposable(_))
        ));
    }
}
