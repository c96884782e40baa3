use crate::error::{Error, Result};

/// Integer weights on the ring's variables. A positive grading (all weights
/// >= 1) makes every graded piece of the ring finite-dimensional.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Grading {
    weights: Vec<i64>,
}

impl Grading {
    pub fn new(weights: Vec<i64>) -> Self {
        Grading { weights }
    }

    pub fn standard(num_vars: usize) -> Self {
        Grading {
            weights: vec![1; num_vars],
        }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weight(&self, i: usize) -> i64 {
        self.weights[i]
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn is_positive(&self) -> bool {
        self.weights.iter().all(|&w| w >= 1)
    }

    pub fn require_positive(&self) -> Result<()> {
        if self.is_positive() {
            Ok(())
        } else {
            Err(Error::InvalidGrading(
                "weights must all be >= 1 for this operation".into(),
            ))
        }
    }
}
