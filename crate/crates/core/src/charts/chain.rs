use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::Polynomial;
use crate::ring::Ring;
use crate::variable::Variable;

use super::gens::PatchIdeal;
use super::hess::HessenbergFunction;

/// μ(h) = max{L : h(L) < n}, the number of interpolation steps between the
/// patch ideal and its bottom-row-free subideal. Undefined for h = (n,…,n).
pub fn mu(h: &HessenbergFunction) -> Result<usize> {
    let n = h.n();
    (1..=n)
        .rev()
        .find(|&l| h.value(l) < n)
        .ok_or(Error::TrivialHessenberg)
}

/// The index set of the m-th chain ideal: all generator positions except
/// the bottom-row positions (n, ℓ) with ℓ ≤ m; ordered bottom-to-top,
/// left-to-right like the full generator list.
pub fn chain_positions(h: &HessenbergFunction, m: usize) -> Result<Vec<(usize, usize)>> {
    validate_chain_input(h, m)?;
    let n = h.n();
    Ok(h.generator_positions()
        .into_iter()
        .filter(|&(k, l)| k < n || l > m)
        .collect())
}

fn validate_chain_input(h: &HessenbergFunction, m: usize) -> Result<()> {
    if !h.is_indecomposable() {
        return Err(Error::InvalidHessenberg(format!("h = {h} is decomposable")));
    }
    let mu_h = mu(h)?;
    if m > mu_h {
        return Err(Error::IndexOutOfRange(format!(
            "m = {m} exceeds mu(h) = {mu_h}"
        )));
    }
    Ok(())
}

/// The m-th chain ideal I(m) of a w₀-chart patch ideal: I(0) is the patch
/// ideal itself and I(m+1) drops the generator f_{n,m+1}, so the ideals
/// increase as m decreases.
pub fn chain_ideal(patch: &PatchIdeal, m: usize) -> Result<Ideal> {
    if !patch.w().is_w0() {
        return Err(Error::Unsupported(
            "chain ideals are defined on the w0 chart".into(),
        ));
    }
    let positions = chain_positions(patch.h(), m)?;
    let gens = positions
        .iter()
        .map(|&(k, l)| patch.entry(k, l).clone())
        .collect();
    Ideal::new(patch.ring(), gens)
}

/// Map x_{i,j} ↦ x_{i−1,j} into the (n−1)-chart ring, undoing the row-shift
/// embedding of the smaller chart; fails if a row-1 variable occurs.
pub fn relabel_down(f: &Polynomial, target: &Ring) -> Result<Polynomial> {
    let src = f.ring().clone();
    let tgt = target.clone();
    f.rename_vars(
        target,
        &move |idx| {
            let (i, j) = src.var(idx).chart_coords()?;
            if i == 1 {
                return None;
            }
            tgt.var_index(&Variable::chart(i - 1, j))
        },
        &|idx| {
            Error::RelabelRowOne(format!(
                "variable index {idx} is in row 1 or missing from the smaller chart"
            ))
        },
    )
}

/// The row-shift embedding x_{i,j} ↦ x_{i+1,j} of a smaller chart ring
/// into a larger one.
pub fn relabel_up(f: &Polynomial, target: &Ring) -> Result<Polynomial> {
    let src = f.ring().clone();
    let tgt = target.clone();
    f.rename_vars(
        target,
        &move |idx| {
            let (i, j) = src.var(idx).chart_coords()?;
            tgt.var_index(&Variable::chart(i + 1, j))
        },
        &|idx| {
            Error::IndexOutOfRange(format!(
                "variable index {idx} has no shifted image in the larger chart"
            ))
        },
    )
}

/// The Hessenberg function h̄ on [n−1] with h̄(ℓ) = min(h(ℓ), n−1),
/// receiving the relabeled generators after the last chain step.
pub fn hbar(h: &HessenbergFunction) -> Result<HessenbergFunction> {
    let n = h.n();
    if n < 3 {
        return Err(Error::InvalidHessenberg(
            "restriction needs n >= 3".into(),
        ));
    }
    let values = (1..n).map(|l| h.value(l).min(n - 1)).collect();
    HessenbergFunction::new(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::CoeffDomain;
    use crate::charts::gens::{hess_generators, w0_ring};
    use crate::charts::perm::Permutation;
    use crate::parse::parse_poly;

    fn h1() -> HessenbergFunction {
        HessenbergFunction::new(vec![2, 3, 4, 5, 5]).unwrap()
    }

    fn patch5() -> PatchIdeal {
        hess_generators(5, &Permutation::w0(5), &h1(), CoeffDomain::Rational).unwrap()
    }

    #[test]
    fn mu_values() {
        assert_eq!(mu(&h1()).unwrap(), 3);
        let full = HessenbergFunction::new(vec![5, 5, 5, 5, 5]).unwrap();
        assert!(mu(&full).is_err());
        // peterson(n) = (2,…,n,n) has h(L) < n exactly for L ≤ n−2
        let p4 = HessenbergFunction::peterson(4).unwrap();
        assert_eq!(mu(&p4).unwrap(), 2);
    }

    #[test]
    fn chain_positions_drop_bottom_row() {
        let h = h1();
        assert_eq!(
            chain_positions(&h, 3).unwrap(),
            vec![(4, 1), (4, 2), (3, 1)]
        );
        assert_eq!(
            chain_positions(&h, 0).unwrap(),
            h.generator_positions()
        );
        let counts: Vec<usize> = (0..=3)
            .map(|m| chain_positions(&h, m).unwrap().len())
            .collect();
        assert_eq!(counts, vec![6, 5, 4, 3]);
        assert!(chain_positions(&h, 4).is_err());
        let dec = HessenbergFunction::new(vec![1, 3, 3]).unwrap();
        assert!(chain_positions(&dec, 0).is_err());
    }

    #[test]
    fn chain_ideals_nest() {
        let p = patch5();
        let ord = p.ring().default_order();
        let i3 = chain_ideal(&p, 3).unwrap();
        let i2 = chain_ideal(&p, 2).unwrap();
        let i0 = chain_ideal(&p, 0).unwrap();
        assert!(i2.contains_ideal(&i3, &ord).unwrap());
        assert!(i0.contains_ideal(&i2, &ord).unwrap());
        assert!(i0.equal(&p.ideal(), &ord).unwrap());
        // I(m+1) + <f_{n,m+1}> = I(m)
        let f51 = p.entry(5, 1).clone();
        let i1 = chain_ideal(&p, 1).unwrap();
        let sum = i1.plus_element(&f51).unwrap();
        assert!(sum.equal(&i0, &ord).unwrap());
    }

    #[test]
    fn relabel_examples() {
        let p = patch5();
        let small = w0_ring(4, CoeffDomain::Rational).unwrap();
        let f42 = p.entry(4, 2);
        let down = relabel_down(f42, &small).unwrap();
        assert_eq!(down, parse_poly(&small, "x[2,2] - x[1,3]").unwrap());
        let f31 = p.entry(3, 1);
        assert_eq!(
            relabel_down(f31, &small).unwrap(),
            parse_poly(&small, "x[3,1] - x[2,2]").unwrap()
        );
        // relabeling fails when a row-1 variable occurs
        let f53 = p.entry(5, 3);
        assert!(matches!(
            relabel_down(f53, &small),
            Err(Error::RelabelRowOne(_))
        ));
    }

    #[test]
    fn relabel_round_trip() {
        let big = w0_ring(5, CoeffDomain::Rational).unwrap();
        let small = w0_ring(4, CoeffDomain::Rational).unwrap();
        let g = parse_poly(&small, "x[1,2]*x[2,1] - 3*x[3,1]").unwrap();
        let up = relabel_up(&g, &big).unwrap();
        assert_eq!(up, parse_poly(&big, "x[2,2]*x[3,1] - 3*x[4,1]").unwrap());
        assert_eq!(relabel_down(&up, &small).unwrap(), g);
    }

    #[test]
    fn relabeled_last_chain_ideal_is_smaller_patch() {
        // I(μ) generators for (5, h₁) relabel onto the (4, h̄) generators.
        let p = patch5();
        let m = mu(&h1()).unwrap();
        let positions = chain_positions(&h1(), m).unwrap();
        let hb = hbar(&h1()).unwrap();
        assert_eq!(hb.values(), &[2, 3, 4, 4]);
        let small_patch =
            hess_generators(4, &Permutation::w0(4), &hb, CoeffDomain::Rational).unwrap();
        let small = small_patch.ring().clone();
        // positions drop the bottom row and keep (k,l) labels
        assert_eq!(positions, small_patch.h().generator_positions());
        for (k, l) in positions {
            let down = relabel_down(p.entry(k, l), &small).unwrap();
            assert_eq!(&down, small_patch.entry(k, l), "f_{{{k},{l}}}");
        }
    }

    #[test]
    fn hbar_requires_n_at_least_3() {
        let h = HessenbergFunction::new(vec![2, 2]).unwrap();
        assert!(hbar(&h).is_err());
    }
}
