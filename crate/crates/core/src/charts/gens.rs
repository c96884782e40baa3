use std::collections::HashMap;

use crate::coeff::CoeffDomain;
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::Ring;
use crate::variable::Variable;

use super::hess::HessenbergFunction;
use super::matrix::{chart_ring, ChartMatrix, PolyMatrix};
use super::perm::Permutation;

/// The w₀-chart polynomial ring on {x_{i,j} : i+j ≤ n} in row-major order,
/// carrying the positive grading weight(x_{i,j}) = n+1−i−j.
pub fn w0_ring(n: usize, domain: CoeffDomain) -> Result<Ring> {
    chart_ring(n, &Permutation::w0(n), domain)
}

/// The lexicographic order with x_{i,j} > x_{i',j'} iff i < i', or i = i'
/// and j < j'. Chart rings declare their variables in exactly this
/// row-major order, so this is the ring's default order.
pub fn row_major_order(ring: &Ring) -> MonomialOrder {
    ring.default_order()
}

/// Lexicographic order reading columns first: x_{i,j} > x_{i',j'} iff
/// j < j', or j = j' and i < i'. Used by the chart explorer.
pub fn column_major_order(ring: &Ring) -> Result<MonomialOrder> {
    let mut keyed: Vec<(usize, usize, usize)> = Vec::with_capacity(ring.num_vars());
    for (idx, v) in ring.vars().iter().enumerate() {
        let (i, j) = v
            .chart_coords()
            .ok_or_else(|| Error::InvalidOrder("column-major order needs chart variables".into()))?;
        keyed.push((j as usize, i as usize, idx));
    }
    keyed.sort_unstable();
    MonomialOrder::from_priority(keyed.into_iter().map(|(_, _, idx)| idx).collect())
}

/// The reverse of the row-major variable ranking (still lexicographic).
pub fn reverse_order(ring: &Ring) -> MonomialOrder {
    MonomialOrder::from_priority((0..ring.num_vars()).rev().collect())
        .expect("a reversed identity is a permutation")
}

/// The variable x_{i,j} as a polynomial of `ring`.
pub fn chart_var(ring: &Ring, i: usize, j: usize) -> Result<Polynomial> {
    let idx = ring
        .var_index(&Variable::chart(i as u32, j as u32))
        .ok_or_else(|| Error::UnknownVariable(format!("x[{i},{j}]")))?;
    Ok(Polynomial::variable(ring, idx))
}

/// The Hessenberg patch ideal data at (w, h): the conjugated-nilpotent
/// matrix entries f^w_{k,ℓ} = ((wM)⁻¹𝖭(wM))_{k,ℓ} together with the
/// generator index set {(k,ℓ) : k > h(ℓ)}.
#[derive(Clone, Debug)]
pub struct PatchIdeal {
    n: usize,
    w: Permutation,
    h: HessenbergFunction,
    ring: Ring,
    conjugated: PolyMatrix,
    positions: Vec<(usize, usize)>,
}

/// Build the patch ideal generators by the direct symbolic matrix product.
pub fn hess_generators(
    n: usize,
    w: &Permutation,
    h: &HessenbergFunction,
    domain: CoeffDomain,
) -> Result<PatchIdeal> {
    if h.n() != n {
        return Err(Error::InvalidHessenberg(format!(
            "h is a function on [{}], chart has n = {n}",
            h.n()
        )));
    }
    let chart = ChartMatrix::build(n, w, domain)?;
    let conjugated = chart.conjugated_nilpotent()?;
    Ok(PatchIdeal {
        n,
        w: w.clone(),
        h: h.clone(),
        ring: chart.ring().clone(),
        conjugated,
        positions: h.generator_positions(),
    })
}

impl PatchIdeal {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn w(&self) -> &Permutation {
        &self.w
    }

    pub fn h(&self) -> &HessenbergFunction {
        &self.h
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Any entry f^w_{k,ℓ} of the conjugated matrix, including the
    /// non-generator entries exposed for testing (on the w₀ chart,
    /// f_{ℓ+1,ℓ} = 1 and f_{k,ℓ} = 0 for k ≤ ℓ).
    pub fn entry(&self, k: usize, l: usize) -> &Polynomial {
        self.conjugated.entry(k, l)
    }

    /// Generator index set, bottom-to-top then left-to-right.
    pub fn positions(&self) -> &[(usize, usize)] {
        &self.positions
    }

    /// The generators in the order of [`PatchIdeal::positions`].
    pub fn generators(&self) -> Vec<Polynomial> {
        self.positions
            .iter()
            .map(|&(k, l)| self.entry(k, l).clone())
            .collect()
    }

    pub fn generator_at(&self, k: usize, l: usize) -> Result<&Polynomial> {
        if self.positions.contains(&(k, l)) {
            Ok(self.entry(k, l))
        } else {
            Err(Error::IndexOutOfRange(format!(
                "(k,l) = ({k},{l}) is not a generator position for h = {}",
                self.h
            )))
        }
    }

    pub fn ideal(&self) -> Ideal {
        Ideal::new(&self.ring, self.generators()).expect("generators live in the patch ring")
    }
}

/// All recursion values f_{k,ℓ}, 1 ≤ ℓ < k ≤ n, on the given w₀-chart
/// ring: base f_{ℓ+1,ℓ} = 1 and
/// f_{k,ℓ} = x_{n+2−k,ℓ} − Σ_{p=ℓ+1}^{k−1} x_{n+1−k,p}·f_{p,ℓ}.
pub fn recursion_family(ring: &Ring, n: usize) -> Result<HashMap<(usize, usize), Polynomial>> {
    let mut fam: HashMap<(usize, usize), Polynomial> = HashMap::new();
    for l in 1..n {
        fam.insert((l + 1, l), Polynomial::one(ring));
        for k in (l + 2)..=n {
            let mut f = chart_var(ring, n + 2 - k, l)?;
            for p in (l + 1)..k {
                let coeff_var = chart_var(ring, n + 1 - k, p)?;
                let prev = &fam[&(p, l)];
                f = &f - &(&coeff_var * prev);
            }
            fam.insert((k, l), f);
        }
    }
    Ok(fam)
}

/// A single recursion value f_{k,ℓ} for k > ℓ+1; must agree with the
/// direct matrix entry of [`hess_generators`] on the w₀ chart.
pub fn recursion_f(ring: &Ring, n: usize, k: usize, l: usize) -> Result<Polynomial> {
    if l < 1 || k > n || k <= l + 1 {
        return Err(Error::IndexOutOfRange(format!(
            "recursion defined for 1 <= l, l+1 < k <= n; got (k,l) = ({k},{l})"
        )));
    }
    let fam = recursion_family(ring, n)?;
    Ok(fam[&(k, l)].clone())
}
