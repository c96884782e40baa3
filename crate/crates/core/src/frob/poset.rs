use serde_json::json;

use crate::charts::{hess_generators, HessenbergFunction, Permutation};
use crate::coeff::CoeffDomain;
use crate::error::{Error, Result};
use crate::frob::compat::{compat_check, CompatReport};
use crate::frob::split::{build_f_n, Provenance, SplittingElement};
use crate::groebner::normal_form;

/// One Hessenberg function's patch ideal in the poset, with its
/// compatibility report.
#[derive(Clone, Debug)]
pub struct PosetNode {
    pub h: HessenbergFunction,
    pub positions: Vec<(usize, usize)>,
    pub generators: Vec<String>,
    pub report: CompatReport,
}

/// All indecomposable Hessenberg patch ideals at size n over 𝔽_p, each
/// certified compatibly split by φ with f = F_n^(p−1), together with the
/// inclusion relations between them. An edge (a, b) means the ideal at
/// node b is contained in the ideal at node a, detected by generator
/// index-set containment and spot-verified by ideal membership.
#[derive(Clone, Debug)]
pub struct SplitPoset {
    pub n: usize,
    pub p: u64,
    pub unit_check: bool,
    pub nodes: Vec<PosetNode>,
    pub edges: Vec<(usize, usize)>,
}

impl SplitPoset {
    pub fn to_json(&self) -> serde_json::Value {
        let nodes: Vec<serde_json::Value> = self
            .nodes
            .iter()
            .map(|node| {
                json!({
                    "h": node.h.to_string(),
                    "generators": node.generators,
                    "frob_power_membership": node.report.frob_power_membership,
                    "sampled_direct_checks": {
                        "count": node.report.sampled.count,
                        "failures": node.report.sampled.failures,
                    },
                })
            })
            .collect();
        let edges: Vec<serde_json::Value> = self
            .edges
            .iter()
            .map(|&(a, b)| {
                json!([self.nodes[a].h.to_string(), self.nodes[b].h.to_string()])
            })
            .collect();
        json!({
            "n": self.n,
            "p": self.p,
            "splitting": "F_n^(p-1)",
            "unit_check": self.unit_check,
            "nodes": nodes,
            "edges": edges,
        })
    }
}

/// Build the full poset of indecomposable Hessenberg patch ideals at size n
/// over 𝔽_p and certify that the single splitting φ_{F_n^(p−1)} compatibly
/// splits every one of them. Any compatibility failure is an error.
pub fn split_poset(
    n: usize,
    p: u64,
    seed: u64,
    samples_per_generator: u64,
    degree_margin: u64,
    budget: usize,
) -> Result<SplitPoset> {
    if n > 6 {
        return Err(Error::BudgetExceeded {
            what: format!("poset construction at n = {n}"),
            limit: 6,
        });
    }
    let f_n = build_f_n(n)?;
    let w0 = Permutation::w0(n);
    let functions = HessenbergFunction::enumerate_indecomposable(n);
    let patches: Vec<_> = functions
        .iter()
        .map(|h| hess_generators(n, &w0, h, CoeffDomain::Prime(p)))
        .collect::<Result<_>>()?;
    let ring = patches[0].ring().clone();
    let order = ring.default_order();
    let s = SplittingElement::from_base(&f_n, p, Provenance::FnPower, &order, budget)?;
    let unit_check = s.unit_check()?;

    let mut nodes = Vec::with_capacity(patches.len());
    for (idx, patch) in patches.iter().enumerate() {
        let ideal = patch.ideal();
        let report = compat_check(
            &s,
            &ideal,
            &order,
            seed.wrapping_add(idx as u64),
            samples_per_generator,
            degree_margin,
        )?;
        if !report.frob_power_membership {
            return Err(Error::CheckFailed {
                context: format!("poset node h = {}", patch.h()),
                check: "Frobenius-power membership".into(),
            });
        }
        nodes.push(PosetNode {
            h: patch.h().clone(),
            positions: patch.positions().to_vec(),
            generators: patch
                .generators()
                .iter()
                .map(|g| g.to_string())
                .collect(),
            report,
        });
    }

    let mut edges = Vec::new();
    for a in 0..nodes.len() {
        for b in 0..nodes.len() {
            if a == b {
                continue;
            }
            let contained = nodes[b]
                .positions
                .iter()
                .all(|pos| nodes[a].positions.contains(pos));
            if !contained {
                continue;
            }
            // spot-verify the inclusion I_b ⊆ I_a by honest membership
            let gb_a = patches[a].ideal().groebner_basis(&order)?;
            for g in patches[b].ideal().gens() {
                if !normal_form(g, &gb_a, &order)?.is_zero() {
                    return Err(Error::CheckFailed {
                        context: format!(
                            "poset edge {} -> {}",
                            nodes[a].h, nodes[b].h
                        ),
                        check: "generator membership".into(),
                    });
                }
            }
            edges.push((a, b));
        }
    }

    Ok(SplitPoset {
        n,
        p,
        unit_check,
        nodes,
        edges,
    })
}
