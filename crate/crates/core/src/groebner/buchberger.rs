use std::collections::BTreeSet;

use crate::error::Result;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::Ring;

use super::division::{divide, normal_form};

/// True iff the nonzero generators have pairwise coprime leading monomials.
/// By Buchberger's first criterion this already certifies a Groebner basis.
pub fn coprime_leads_gb_check(gens: &[Polynomial], order: &MonomialOrder) -> Result<bool> {
    let leads: Vec<&Monomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.leading_monomial(order).unwrap())
        .collect();
    for i in 0..leads.len() {
        for j in (i + 1)..leads.len() {
            if !leads[i].is_coprime(leads[j]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Polynomial {
    let ring = f.ring().clone();
    let domain = ring.domain().clone();
    let (fm, fc) = f.leading_term(order).unwrap();
    let (gm, gc) = g.leading_term(order).unwrap();
    let l = fm.lcm(gm);
    let mf = l.try_div(fm).unwrap();
    let mg = l.try_div(gm).unwrap();
    let cf = domain.inv(fc).expect("leading coefficient must be a unit");
    let cg = domain.inv(gc).expect("leading coefficient must be a unit");
    &f.mul_term(&mf, &cf) - &g.mul_term(&mg, &cg)
}

/// True iff every S-polynomial of the list reduces to zero against it.
pub fn is_groebner(basis: &[Polynomial], order: &MonomialOrder) -> Result<bool> {
    let nz: Vec<Polynomial> = basis.iter().filter(|g| !g.is_zero()).cloned().collect();
    for i in 0..nz.len() {
        for j in (i + 1)..nz.len() {
            let lm_i = nz[i].leading_monomial(order).unwrap();
            let lm_j = nz[j].leading_monomial(order).unwrap();
            if lm_i.is_coprime(lm_j) {
                continue;
            }
            let s = s_polynomial(&nz[i], &nz[j], order);
            if !normal_form(&s, &nz, order)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

struct Elem {
    poly: Polynomial,
    /// Cofactors expressing the element over the original generators.
    repr: Option<Vec<Polynomial>>,
}

fn reduce_traced(
    p: &Polynomial,
    repr: Option<Vec<Polynomial>>,
    basis: &[Elem],
    order: &MonomialOrder,
) -> Result<(Polynomial, Option<Vec<Polynomial>>)> {
    let divisors: Vec<Polynomial> = basis.iter().map(|e| e.poly.clone()).collect();
    let (quotients, rem) = divide(p, &divisors, order)?;
    let repr = match repr {
        None => None,
        Some(mut r) => {
            for (q, e) in quotients.iter().zip(basis) {
                if q.is_zero() {
                    continue;
                }
                let er = e.repr.as_ref().expect("traced basis element");
                for (slot, cof) in r.iter_mut().zip(er) {
                    *slot = &*slot - &(q * cof);
                }
            }
            Some(r)
        }
    };
    Ok((rem, repr))
}

fn buchberger_inner(
    gens: &[Polynomial],
    order: &MonomialOrder,
    traced: bool,
) -> Result<Vec<Elem>> {
    let ring: Option<&Ring> = gens.first().map(|g| g.ring());
    if let Some(r) = ring {
        r.require_field()?;
    }
    let mut basis: Vec<Elem> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let repr = traced.then(|| {
            let mut r = vec![Polynomial::zero(g.ring()); gens.len()];
            r[i] = Polynomial::one(g.ring());
            r
        });
        basis.push(Elem {
            poly: g.clone(),
            repr,
        });
    }

    // Pair queue keyed by (total degree of the lcm, i, j): the normal
    // selection strategy with a deterministic tie-break.
    let mut queue: BTreeSet<(u64, usize, usize)> = BTreeSet::new();
    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();
    let key = |basis: &[Elem], i: usize, j: usize| {
        let a = basis[i].poly.leading_monomial(order).unwrap();
        let b = basis[j].poly.leading_monomial(order).unwrap();
        (a.lcm(b).total_degree(), i, j)
    };
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            queue.insert(key(&basis, i, j));
        }
    }

    while let Some(&entry) = queue.iter().next() {
        queue.remove(&entry);
        let (_, i, j) = entry;
        done.insert((i, j));
        let lm_i = basis[i].poly.leading_monomial(order).unwrap().clone();
        let lm_j = basis[j].poly.leading_monomial(order).unwrap().clone();
        if lm_i.is_coprime(&lm_j) {
            continue;
        }
        let lcm_ij = lm_i.lcm(&lm_j);
        // Chain criterion: some k with lt(g_k) | lcm(i,j) whose pairs with
        // both i and j have already been treated.
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k]
                    .poly
                    .leading_monomial(order)
                    .unwrap()
                    .divides(&lcm_ij)
                && done.contains(&(i.min(k), i.max(k)))
                && done.contains(&(j.min(k), j.max(k)))
        });
        if chained {
            continue;
        }
        let s = s_polynomial(&basis[i].poly, &basis[j].poly, order);
        let s_repr = if traced {
            let ring = s.ring().clone();
            let domain = ring.domain().clone();
            let (fm, fc) = basis[i].poly.leading_term(order).unwrap();
            let (gm, gc) = basis[j].poly.leading_term(order).unwrap();
            let l = fm.lcm(gm);
            let tf = Polynomial::term(&ring, l.try_div(fm).unwrap(), domain.inv(fc)?);
            let tg = Polynomial::term(&ring, l.try_div(gm).unwrap(), domain.inv(gc)?);
            let ri = basis[i].repr.as_ref().unwrap();
            let rj = basis[j].repr.as_ref().unwrap();
            Some(
                ri.iter()
                    .zip(rj)
                    .map(|(a, b)| &(&tf * a) - &(&tg * b))
                    .collect(),
            )
        } else {
            None
        };
        let (h, h_repr) = reduce_traced(&s, s_repr, &basis, order)?;
        if h.is_zero() {
            continue;
        }
        let new = basis.len();
        basis.push(Elem {
            poly: h,
            repr: h_repr,
        });
        for k in 0..new {
            queue.insert(key(&basis, k, new));
        }
    }

    // Minimalize: drop elements whose lead is divisible by another
    // surviving element's lead.
    let leads: Vec<Monomial> = basis
        .iter()
        .map(|e| e.poly.leading_monomial(order).unwrap().clone())
        .collect();
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            if leads[j].divides(&leads[i]) && (leads[j] != leads[i] || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut out: Vec<Elem> = Vec::new();
    for (e, k) in basis.into_iter().zip(keep) {
        if !k {
            continue;
        }
        let inv = e
            .poly
            .ring()
            .domain()
            .inv(e.poly.leading_coeff(order).unwrap())?;
        out.push(Elem {
            poly: e.poly.mul_coeff(&inv),
            repr: e.repr.map(|r| r.iter().map(|c| c.mul_coeff(&inv)).collect()),
        });
    }
    // Deterministic final order: leads descending under the monomial order.
    out.sort_by(|a, b| {
        order.cmp(
            b.poly.leading_monomial(order).unwrap(),
            a.poly.leading_monomial(order).unwrap(),
        )
    });
    Ok(out)
}

/// Buchberger's algorithm with the normal pair-selection strategy and the
/// coprime-lcm and chain criteria. Returns a minimal monic Groebner basis
/// with a deterministic element order (leads descending). When the input
/// already has pairwise coprime leads the output is exactly the monic
/// rescaling of the input.
pub fn buchberger(gens: &[Polynomial], order: &MonomialOrder) -> Result<Vec<Polynomial>> {
    Ok(buchberger_inner(gens, order, false)?
        .into_iter()
        .map(|e| e.poly)
        .collect())
}

/// Like [`buchberger`], also returning for each basis element the cofactors
/// that express it as a combination of the original generators.
pub fn buchberger_traced(
    gens: &[Polynomial],
    order: &MonomialOrder,
) -> Result<Vec<(Polynomial, Vec<Polynomial>)>> {
    Ok(buchberger_inner(gens, order, true)?
        .into_iter()
        .map(|e| (e.poly, e.repr.unwrap()))
        .collect())
}

/// Full tail interreduction of a Groebner basis: afterwards no term of any
/// element is divisible by another element's leading monomial, which makes
/// the basis the canonical reduced one.
pub fn autoreduce(basis: &[Polynomial], order: &MonomialOrder) -> Result<Vec<Polynomial>> {
    let mut out: Vec<Polynomial> = basis.to_vec();
    loop {
        let mut changed = false;
        for i in 0..out.len() {
            let others: Vec<Polynomial> = out
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let red = normal_form(&out[i], &others, order)?;
            if red != out[i] {
                out[i] = red;
                changed = true;
            }
        }
        out.retain(|g| !g.is_zero());
        if !changed {
            break;
        }
    }
    for g in out.iter_mut() {
        *g = g.monic(order)?;
    }
    out.sort_by(|a, b| {
        order.cmp(
            b.leading_monomial(order).unwrap(),
            a.leading_monomial(order).unwrap(),
        )
    });
    Ok(out)
}
