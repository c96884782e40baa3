//! JSON files for rings and ideals.
//!
//! An ideal file holds a ring descriptor and generator strings:
//!
//! ```json
//! {
//!   "ring": {
//!     "field": "Q",
//!     "variables": ["x[1,1]", "x[1,2]", "x[2,1]"],
//!     "grading": [2, 1, 1]
//!   },
//!   "generators": ["x[2,1] - x[1,2]"]
//! }
//! ```
//!
//! `field` is `"Q"`, `"Z"`, or `{"Fp": p}`. The ring may instead be given
//! by a chart descriptor `"chart": {"n": 4, "w": "w0"}` (or `w` as a
//! one-line permutation array), which builds the chart coordinate ring with
//! its standard grading. Variable names of the form `x[i,j]` always denote
//! chart coordinates.

use std::path::Path;

use serde_json::{json, Value};

use crate::charts::{chart_ring, Permutation};
use crate::coeff::CoeffDomain;
use crate::error::{Error, Result};
use crate::grading::Grading;
use crate::groebner::Ideal;
use crate::parse::parse_poly;
use crate::ring::Ring;
use crate::variable::{Variable, VariableSet};

fn field_to_json(domain: &CoeffDomain) -> Value {
    match domain {
        CoeffDomain::Rational => json!("Q"),
        CoeffDomain::Integer => json!("Z"),
        CoeffDomain::Prime(p) => json!({ "Fp": p }),
    }
}

fn field_from_json(v: &Value) -> Result<CoeffDomain> {
    if let Some(s) = v.as_str() {
        return match s {
            "Q" => Ok(CoeffDomain::Rational),
            "Z" => Ok(CoeffDomain::Integer),
            other => Err(Error::Json(format!("unknown field {other:?}"))),
        };
    }
    if let Some(p) = v.get("Fp").and_then(Value::as_u64) {
        return CoeffDomain::prime(p);
    }
    Err(Error::Json(format!("bad field descriptor: {v}")))
}

/// Parse a printed variable: `x[i,j]` (1-based, positive) is a chart
/// coordinate, anything else a free name.
pub fn variable_from_str(s: &str) -> Variable {
    if let Some(inner) = s.strip_prefix("x[").and_then(|t| t.strip_suffix(']')) {
        if let Some((a, b)) = inner.split_once(',') {
            if let (Ok(i), Ok(j)) = (a.trim().parse::<u32>(), b.trim().parse::<u32>()) {
                if i >= 1 && j >= 1 {
                    return Variable::chart(i, j);
                }
            }
        }
    }
    Variable::named(s)
}

pub fn ring_to_json(ring: &Ring) -> Value {
    let vars: Vec<String> = ring.vars().iter().map(|v| v.to_string()).collect();
    let grading = match ring.grading() {
        Some(g) => json!(g.weights()),
        None => Value::Null,
    };
    json!({
        "field": field_to_json(ring.domain()),
        "variables": vars,
        "grading": grading,
    })
}

pub fn ring_from_json(v: &Value) -> Result<Ring> {
    let field = field_from_json(
        v.get("field")
            .ok_or_else(|| Error::Json("ring descriptor needs a field".into()))?,
    )?;
    let explicit_grading = match v.get("grading") {
        None | Some(Value::Null) => None,
        Some(g) => {
            let arr = g
                .as_array()
                .ok_or_else(|| Error::Json("grading must be an array of integers".into()))?;
            let weights = arr
                .iter()
                .map(|x| {
                    x.as_i64()
                        .ok_or_else(|| Error::Json(format!("bad grading weight {x}")))
                })
                .collect::<std::result::Result<Vec<i64>, Error>>()?;
            Some(Grading::new(weights))
        }
    };
    if let Some(chart) = v.get("chart") {
        let n = chart
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Json("chart descriptor needs n".into()))?
            as usize;
        let w = match chart.get("w") {
            None => Permutation::w0(n),
            Some(Value::String(s)) if s == "w0" => Permutation::w0(n),
            Some(Value::Array(arr)) => {
                let one_line = arr
                    .iter()
                    .map(|x| {
                        x.as_u64()
                            .map(|u| u as usize)
                            .ok_or_else(|| Error::Json(format!("bad permutation entry {x}")))
                    })
                    .collect::<std::result::Result<Vec<usize>, Error>>()?;
                Permutation::from_one_line(one_line)?
            }
            Some(other) => {
                return Err(Error::Json(format!("bad chart permutation: {other}")))
            }
        };
        let ring = chart_ring(n, &w, field)?;
        return match explicit_grading {
            None => Ok(ring),
            Some(g) => Ring::new(ring.vars().clone(), ring.domain().clone(), Some(g)),
        };
    }
    let names = v
        .get("variables")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Json("ring descriptor needs variables or chart".into()))?;
    let vars = names
        .iter()
        .map(|x| {
            x.as_str()
                .map(variable_from_str)
                .ok_or_else(|| Error::Json(format!("bad variable entry {x}")))
        })
        .collect::<std::result::Result<Vec<Variable>, Error>>()?;
    Ring::new(VariableSet::new(vars)?, field, explicit_grading)
}

/// Serialize an ideal with generators printed in the ring's default order.
pub fn ideal_to_json(ideal: &Ideal) -> Value {
    let order = ideal.ring().default_order();
    let gens: Vec<String> = ideal
        .gens()
        .iter()
        .map(|g| g.to_string_with(&order))
        .collect();
    json!({
        "ring": ring_to_json(ideal.ring()),
        "generators": gens,
    })
}

pub fn ideal_from_json(v: &Value) -> Result<Ideal> {
    let ring = ring_from_json(
        v.get("ring")
            .ok_or_else(|| Error::Json("ideal file needs a ring".into()))?,
    )?;
    let gens = v
        .get("generators")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Json("ideal file needs a generators array".into()))?;
    let polys = gens
        .iter()
        .map(|x| {
            let s = x
                .as_str()
                .ok_or_else(|| Error::Json(format!("bad generator entry {x}")))?;
            parse_poly(&ring, s)
        })
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(&ring, polys)
}

pub fn save_ideal(ideal: &Ideal, path: &Path) -> Result<()> {
    let text = serde_json::to_string_pretty(&ideal_to_json(ideal))
        .map_err(|e| Error::Json(e.to_string()))?;
    std::fs::write(path, text + "\n").map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn load_ideal(path: &Path) -> Result<Ideal> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| Error::Json(e.to_string()))?;
    ideal_from_json(&v)
}
