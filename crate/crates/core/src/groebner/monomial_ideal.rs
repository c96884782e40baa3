use crate::error::{Error, Result};
use crate::grading::Grading;
use crate::monomial::Monomial;
use crate::ring::Ring;

/// Monomial ideal stored by its unique minimal generating monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    ring: Ring,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes, sorts canonically, and deduplicates the generators.
    pub fn new(ring: &Ring, gens: Vec<Monomial>) -> Self {
        let mut min: Vec<Monomial> = Vec::new();
        let mut sorted = gens;
        sorted.sort();
        sorted.dedup();
        for m in &sorted {
            if !sorted.iter().any(|d| d != m && d.divides(m)) {
                min.push(m.clone());
            }
        }
        MonomialIdeal {
            ring: ring.clone(),
            gens: min,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    /// True iff every minimal generator is a single variable.
    pub fn is_ideal_of_indeterminates(&self) -> bool {
        self.gens.iter().all(|g| g.single_var().is_some())
    }

    /// Krull dimension of the quotient by this ideal: the largest size of a
    /// variable subset containing no generator's support. Exhaustive search,
    /// valid up to 25 variables.
    pub fn dimension(&self) -> Result<usize> {
        let n = self.ring.num_vars();
        if n > 25 {
            return Err(Error::Unsupported(format!(
                "monomial dimension search limited to 25 variables, got {n}"
            )));
        }
        if self.gens.iter().any(|g| g.is_one()) {
            // Unit ideal: the quotient is the zero ring; report dimension 0.
            return Ok(0);
        }
        let supports: Vec<u32> = self
            .gens
            .iter()
            .map(|g| g.support().fold(0u32, |acc, i| acc | (1 << i)))
            .collect();
        let mut best = 0usize;
        for subset in 0u32..(1u32 << n) {
            let size = subset.count_ones() as usize;
            if size <= best {
                continue;
            }
            if supports.iter().all(|s| s & !subset != 0) {
                best = size;
            }
        }
        Ok(best)
    }

    /// Codimension (height) in the ambient ring.
    pub fn codimension(&self) -> Result<usize> {
        Ok(self.ring.num_vars() - self.dimension()?)
    }

    /// Values of the Hilbert function of the quotient ring in weighted
    /// degrees 0..=dmax: the number of monomials of each degree not lying in
    /// the ideal. Requires a positive grading so each piece is finite.
    pub fn hilbert_function(&self, grading: &Grading, dmax: i64) -> Result<Vec<u64>> {
        grading.require_positive()?;
        if grading.len() != self.ring.num_vars() {
            return Err(Error::InvalidGrading(
                "grading arity does not match the ring".into(),
            ));
        }
        let mut counts = vec![0u64; (dmax.max(0) as usize) + 1];
        let n = self.ring.num_vars();
        let mut exps = vec![0u32; n];
        self.count_rec(0, 0, dmax, grading, &mut exps, &mut counts);
        Ok(counts)
    }

    fn count_rec(
        &self,
        var: usize,
        deg: i64,
        dmax: i64,
        grading: &Grading,
        exps: &mut Vec<u32>,
        counts: &mut [u64],
    ) {
        if var == exps.len() {
            let m = Monomial::from_exps(exps.clone());
            if !self.contains(&m) {
                counts[deg as usize] += 1;
            }
            return;
        }
        let w = grading.weight(var);
        let mut e = 0u32;
        loop {
            let d = deg + w * e as i64;
            if d > dmax {
                break;
            }
            exps[var] = e;
            self.count_rec(var + 1, d, dmax, grading, exps, counts);
            e += 1;
        }
        exps[var] = 0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::CoeffDomain;

    fn ring(names: &[&str]) -> Ring {
        Ring::named(names, CoeffDomain::Rational).unwrap()
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exps(e.to_vec())
    }

    #[test]
    fn minimalization() {
        let r = ring(&["x", "y"]);
        let i = MonomialIdeal::new(&r, vec![m(&[2, 0]), m(&[1, 0]), m(&[1, 1])]);
        assert_eq!(i.gens(), &[m(&[1, 0])]);
    }

    #[test]
    fn dimension_of_principal_variable() {
        // <x> in a three-variable ring leaves a two-dimensional quotient.
        let r = ring(&["x", "y", "z"]);
        let i = MonomialIdeal::new(&r, vec![m(&[1, 0, 0])]);
        assert_eq!(i.dimension().unwrap(), 2);
        assert_eq!(i.codimension().unwrap(), 1);
    }

    #[test]
    fn dimension_of_edge_ideal() {
        // <x*y> in two variables: both axes survive, dimension 1.
        let r = ring(&["x", "y"]);
        let i = MonomialIdeal::new(&r, vec![m(&[1, 1])]);
        assert_eq!(i.dimension().unwrap(), 1);
        // zero ideal: everything survives.
        let z = MonomialIdeal::new(&r, vec![]);
        assert_eq!(z.dimension().unwrap(), 2);
    }

    #[test]
    fn squarefree_and_indeterminates() {
        let r = ring(&["x", "y"]);
        let i = MonomialIdeal::new(&r, vec![m(&[1, 0]), m(&[0, 1])]);
        assert!(i.is_squarefree());
        assert!(i.is_ideal_of_indeterminates());
        let j = MonomialIdeal::new(&r, vec![m(&[2, 0])]);
        assert!(!j.is_squarefree());
        assert!(!j.is_ideal_of_indeterminates());
        let k = MonomialIdeal::new(&r, vec![m(&[1, 1])]);
        assert!(k.is_squarefree());
        assert!(!k.is_ideal_of_indeterminates());
    }

    #[test]
    fn hilbert_function_standard_weights() {
        // <a> in k[a,b], weights (1,1): one monomial (a power of b) per degree.
        let r = ring(&["a", "b"]);
        let i = MonomialIdeal::new(&r, vec![m(&[1, 0])]);
        let hf = i
            .hilbert_function(&Grading::new(vec![1, 1]), 3)
            .unwrap();
        assert_eq!(hf, vec![1, 1, 1, 1]);
    }

    #[test]
    fn hilbert_function_weighted() {
        // zero ideal in k[a,b], weights (2,1): degree 2 has a and b^2.
        let r = ring(&["a", "b"]);
        let i = MonomialIdeal::new(&r, vec![]);
        let hf = i
            .hilbert_function(&Grading::new(vec![2, 1]), 2)
            .unwrap();
        assert_eq!(hf, vec![1, 1, 2]);
        let nonpos = i.hilbert_function(&Grading::new(vec![0, 1]), 2);
        assert!(nonpos.is_err());
    }
}
