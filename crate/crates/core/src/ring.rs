use std::fmt;
use std::sync::Arc;

use crate::coeff::CoeffDomain;
use crate::error::{Error, Result};
use crate::grading::Grading;
use crate::order::MonomialOrder;
use crate::variable::{Variable, VariableSet};

#[derive(Debug, PartialEq, Eq, Hash)]
struct RingData {
    vars: VariableSet,
    domain: CoeffDomain,
    grading: Option<Grading>,
}

/// Cheap shared handle to a polynomial ring descriptor. Two handles compare
/// equal when they describe the same ring (same variables, domain, grading).
#[derive(Clone)]
pub struct Ring(Arc<RingData>);

impl Ring {
    pub fn new(vars: VariableSet, domain: CoeffDomain, grading: Option<Grading>) -> Result<Self> {
        if let Some(g) = &grading {
            if g.len() != vars.len() {
                return Err(Error::InvalidGrading(format!(
                    "{} weights for {} variables",
                    g.len(),
                    vars.len()
                )));
            }
        }
        Ok(Ring(Arc::new(RingData {
            vars,
            domain,
            grading,
        })))
    }

    pub fn named(names: &[&str], domain: CoeffDomain) -> Result<Self> {
        Ring::new(VariableSet::named(names)?, domain, None)
    }

    pub fn num_vars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn vars(&self) -> &VariableSet {
        &self.0.vars
    }

    pub fn var(&self, i: usize) -> &Variable {
        self.0.vars.get(i)
    }

    pub fn var_index(&self, v: &Variable) -> Option<usize> {
        self.0.vars.position(v)
    }

    pub fn domain(&self) -> &CoeffDomain {
        &self.0.domain
    }

    pub fn grading(&self) -> Option<&Grading> {
        self.0.grading.as_ref()
    }

    pub fn require_field(&self) -> Result<()> {
        if self.0.domain.is_field() {
            Ok(())
        } else {
            Err(Error::NotAField(format!("{:?}", self.0.domain)))
        }
    }

    /// Lex order on the variables in declaration order.
    pub fn default_order(&self) -> MonomialOrder {
        MonomialOrder::lex_default(self.num_vars())
    }

    /// Same variables and grading over a different coefficient domain.
    pub fn with_domain(&self, domain: CoeffDomain) -> Ring {
        Ring(Arc::new(RingData {
            vars: self.0.vars.clone(),
            domain,
            grading: self.0.grading.clone(),
        }))
    }

    pub fn same_ring(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other)
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({:?}, vars=[", self.0.domain)?;
        for (i, v) in self.0.vars.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equality_is_structural() {
        let a = Ring::named(&["x", "y"], CoeffDomain::Rational).unwrap();
        let b = Ring::named(&["x", "y"], CoeffDomain::Rational).unwrap();
        let c = Ring::named(&["x", "z"], CoeffDomain::Rational).unwrap();
        let d = Ring::named(&["x", "y"], CoeffDomain::Integer).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_ne!(a, d);
    }

    #[test]
    fn grading_length_checked() {
        let vs = VariableSet::named(&["x", "y"]).unwrap();
        let bad = Ring::new(vs, CoeffDomain::Rational, Some(Grading::new(vec![1])));
        assert!(bad.is_err());
    }
}
