use std::fmt;

use crate::error::{Error, Result};

/// Permutation of {1, …, n} in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    /// `values[i]` is w(i+1); always a bijection of [n].
    values: Vec<usize>,
}

impl Permutation {
    pub fn from_one_line(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty one-line notation".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v < 1 || v > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} out of range 1..={n}"
                )));
            }
            if seen[v] {
                return Err(Error::InvalidPermutation(format!("value {v} repeated")));
            }
            seen[v] = true;
        }
        Ok(Permutation { values })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n).collect(),
        }
    }

    /// The order-reversing permutation [n, n−1, …, 1].
    pub fn w0(n: usize) -> Self {
        Permutation {
            values: (1..=n).rev().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// w(i) for 1-based i.
    pub fn apply(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn one_line(&self) -> &[usize] {
        &self.values
    }

    pub fn inverse(&self) -> Permutation {
        let n = self.n();
        let mut inv = vec![0usize; n];
        for i in 1..=n {
            inv[self.apply(i) - 1] = i;
        }
        Permutation { values: inv }
    }

    pub fn is_w0(&self) -> bool {
        *self == Permutation::w0(self.n())
    }

    /// True iff some i < j < k has w(i) > w(j) > w(k), i.e. the one-line
    /// notation contains a decreasing subsequence of length three.
    pub fn contains_321_pattern(&self) -> bool {
        let n = self.n();
        for i in 1..=n {
            for j in (i + 1)..=n {
                if self.apply(i) <= self.apply(j) {
                    continue;
                }
                for k in (j + 1)..=n {
                    if self.apply(j) > self.apply(k) {
                        return true;
                    }
                }
            }
        }
        false
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (idx, v) in self.values.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}
