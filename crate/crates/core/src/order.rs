use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// Lexicographic monomial order induced by a priority permutation of the
/// variables: `priority[0]` is the greatest variable, and monomials compare
/// by the exponent of the greatest variable where they differ.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    priority: Vec<usize>,
}

impl MonomialOrder {
    /// Lex order with the variables in declaration order (slot 0 greatest).
    pub fn lex_default(num_vars: usize) -> Self {
        MonomialOrder {
            priority: (0..num_vars).collect(),
        }
    }

    pub fn from_priority(priority: Vec<usize>) -> Result<Self> {
        let n = priority.len();
        let mut seen = vec![false; n];
        for &v in &priority {
            if v >= n || seen[v] {
                return Err(Error::InvalidOrder(format!(
                    "priority list is not a permutation of 0..{n}"
                )));
            }
            seen[v] = true;
        }
        Ok(MonomialOrder { priority })
    }

    pub fn num_vars(&self) -> usize {
        self.priority.len()
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    /// Rank of a variable: 0 for the greatest.
    pub fn rank(&self, var: usize) -> usize {
        self.priority.iter().position(|&v| v == var).unwrap()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for &v in &self.priority {
            match a.exp(v).cmp(&b.exp(v)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    /// Compares two variables as monomials: smaller rank means greater.
    pub fn var_cmp(&self, a: usize, b: usize) -> Ordering {
        self.rank(b).cmp(&self.rank(a))
    }

    /// A new order with `front` moved to the highest ranks (keeping their
    /// relative order), used to build elimination orders.
    pub fn with_front(&self, front: &[usize]) -> Result<Self> {
        for &v in front {
            if v >= self.priority.len() {
                return Err(Error::InvalidOrder(format!("variable {v} out of range")));
            }
        }
        let mut priority: Vec<usize> = self
            .priority
            .iter()
            .copied()
            .filter(|v| front.contains(v))
            .collect();
        priority.extend(self.priority.iter().copied().filter(|v| !front.contains(v)));
        Self::from_priority(priority)
    }
}
