use std::fmt;

use crate::error::{Error, Result};

/// Hessenberg function h: [n] → [n], nondecreasing with h(i) ≥ i.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HessenbergFunction {
    values: Vec<usize>,
}

impl HessenbergFunction {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::InvalidHessenberg("empty value list".into()));
        }
        for (idx, &v) in values.iter().enumerate() {
            let i = idx + 1;
            if v < i {
                return Err(Error::InvalidHessenberg(format!(
                    "h({i}) = {v} violates h(i) >= i"
                )));
            }
            if v > n {
                return Err(Error::InvalidHessenberg(format!("h({i}) = {v} exceeds n = {n}")));
            }
            if idx > 0 && v < values[idx - 1] {
                return Err(Error::InvalidHessenberg(format!(
                    "h({i}) = {v} decreases below h({}) = {}",
                    i - 1,
                    values[idx - 1]
                )));
            }
        }
        Ok(HessenbergFunction { values })
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// h(i) for 1-based i.
    pub fn value(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// h(i) ≥ i+1 for all i < n.
    pub fn is_indecomposable(&self) -> bool {
        let n = self.n();
        (1..n).all(|i| self.value(i) >= i + 1)
    }

    /// h = (n, …, n): the associated patch ideal is the zero ideal.
    pub fn is_trivial(&self) -> bool {
        let n = self.n();
        self.values.iter().all(|&v| v == n)
    }

    /// The function (2, 3, …, n, n); its patch ideal has the most generators
    /// among indecomposable functions.
    pub fn peterson(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidHessenberg("need n >= 2".into()));
        }
        let mut values: Vec<usize> = (2..=n).collect();
        values.push(n);
        HessenbergFunction::new(values)
    }

    /// Pointwise comparison h(i) ≤ g(i); larger h means fewer generators.
    pub fn leq(&self, other: &HessenbergFunction) -> bool {
        self.n() == other.n()
            && self
                .values
                .iter()
                .zip(&other.values)
                .all(|(a, b)| a <= b)
    }

    /// All indecomposable Hessenberg functions on [n], in lexicographic
    /// order of their value lists.
    pub fn enumerate_indecomposable(n: usize) -> Vec<HessenbergFunction> {
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(n);
        enumerate_rec(n, &mut prefix, &mut out);
        out
    }

    /// Generator index set {(k, ℓ) : k > h(ℓ)} in bottom-to-top (k
    /// descending), left-to-right (ℓ ascending) order — the order in which
    /// each generator's lead variable is absent from all later generators.
    pub fn generator_positions(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for k in (2..=n).rev() {
            for l in 1..k {
                if k > self.value(l) {
                    out.push((k, l));
                }
            }
        }
        out
    }
}

fn enumerate_rec(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<HessenbergFunction>) {
    let i = prefix.len() + 1;
    if i > n {
        out.push(HessenbergFunction {
            values: prefix.clone(),
        });
        return;
    }
    let lower = if i < n {
        // indecomposability: h(i) ≥ i+1 before the last position
        (i + 1).max(prefix.last().copied().unwrap_or(1))
    } else {
        n
    };
    for v in lower..=n {
        prefix.push(v);
        enumerate_rec(n, prefix, out);
        prefix.pop();
    }
}

impl fmt::Display for HessenbergFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, v) in self.values.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}
