use crate::grading::Grading;

/// Exponent vector; entry i is the exponent of the ring's i-th variable.
///
/// The derived `Ord` (entrywise lexicographic with slot 0 most significant)
/// serves as the canonical internal order for deterministic iteration; it is
/// unrelated to the monomial orders used for leading terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(num_vars: usize) -> Self {
        Monomial(vec![0; num_vars])
    }

    pub fn var(num_vars: usize, i: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(
            self.0
                .iter()
                .map(|a| a.checked_mul(k).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial(
                self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
            ))
        } else {
            None
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn weighted_degree(&self, grading: &Grading) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &e)| grading.weight(i) * e as i64)
            .sum()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// True when the monomial is a single variable to the first power.
    pub fn single_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 1 && found.is_none() {
                found = Some(i);
            } else if e != 0 {
                return None;
            }
        }
        found
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_and_lcm() {
        let a = Monomial::from_exps(vec![2, 1, 0]);
        let b = Monomial::from_exps(vec![1, 1, 0]);
        assert!(b.divides(&a));
        assert_eq!(a.try_div(&b), Some(Monomial::from_exps(vec![1, 0, 0])));
        assert_eq!(b.try_div(&a), None);
        assert_eq!(a.lcm(&b), a);
        assert_eq!(a.gcd(&b), b);
    }

    #[test]
    fn coprimality() {
        let a = Monomial::from_exps(vec![2, 0, 0]);
        let b = Monomial::from_exps(vec![0, 3, 1]);
        assert!(a.is_coprime(&b));
        assert!(!a.is_coprime(&a));
        assert!(Monomial::one(3).is_coprime(&a));
    }

    #[test]
    fn single_var_detection() {
        assert_eq!(Monomial::var(3, 1).single_var(), Some(1));
        assert_eq!(Monomial::from_exps(vec![0, 2, 0]).single_var(), None);
        assert_eq!(Monomial::from_exps(vec![1, 1, 0]).single_var(), None);
        assert_eq!(Monomial::one(3).single_var(), None);
    }
}
