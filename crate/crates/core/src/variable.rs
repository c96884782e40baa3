use std::fmt;

use crate::error::{Error, Result};

/// A ring variable: a chart matrix coordinate x[i,j] (1-based) or a free name.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variable {
    Chart { row: u32, col: u32 },
    Named(String),
}

impl Variable {
    pub fn chart(row: u32, col: u32) -> Self {
        Variable::Chart { row, col }
    }

    pub fn named(name: &str) -> Self {
        Variable::Named(name.to_string())
    }

    pub fn chart_coords(&self) -> Option<(u32, u32)> {
        match self {
            Variable::Chart { row, col } => Some((*row, *col)),
            Variable::Named(_) => None,
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variable::Chart { row, col } => write!(f, "x[{row},{col}]"),
            Variable::Named(s) => write!(f, "{s}"),
        }
    }
}

/// Ordered list of distinct variables; the position of a variable is its
/// exponent slot in every monomial of the ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VariableSet {
    vars: Vec<Variable>,
}

impl VariableSet {
    pub fn new(vars: Vec<Variable>) -> Result<Self> {
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::InvalidVariableSet(format!("duplicate variable {v}")));
            }
        }
        Ok(VariableSet { vars })
    }

    pub fn named(names: &[&str]) -> Result<Self> {
        Self::new(names.iter().map(|n| Variable::named(n)).collect())
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn get(&self, i: usize) -> &Variable {
        &self.vars[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Variable> {
        self.vars.iter()
    }

    pub fn position(&self, v: &Variable) -> Option<usize> {
        self.vars.iter().position(|w| w == v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        assert_eq!(Variable::chart(1, 2).to_string(), "x[1,2]");
        assert_eq!(Variable::named("t").to_string(), "t");
    }

    #[test]
    fn rejects_duplicates() {
        let dup = VariableSet::new(vec![Variable::named("x"), Variable::named("x")]);
        assert!(dup.is_err());
    }

    #[test]
    fn position_lookup() {
        let vs = VariableSet::named(&["x", "y", "z"]).unwrap();
        assert_eq!(vs.position(&Variable::named("y")), Some(1));
        assert_eq!(vs.position(&Variable::named("w")), None);
    }
}
