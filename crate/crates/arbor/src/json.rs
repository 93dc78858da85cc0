//! JSON wire formats. Objects serialize with keys in sorted order and all
//! big integers as decimal strings, so identical values always print
//! identical bytes.

use std::fmt;

use arbor_core::{
    BivariatePoly, Decomposition, PowerSumFunction, ProfileKind, RecoveredProfile, Tree,
};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::scan::{RoundtripReport, ScanReport};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JsonError {
    NotAnObject,
    Field(&'static str),
    Coefficient(String),
}

impl fmt::Display for JsonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JsonError::NotAnObject => write!(f, "expected a JSON object"),
            JsonError::Field(name) => write!(f, "missing or malformed field {name:?}"),
            JsonError::Coefficient(s) => {
                write!(f, "coefficient {s:?} is not a decimal integer string")
            }
        }
    }
}

impl std::error::Error for JsonError {}

/// `{"n": .., "terms": [[q, r, "coeff"], ..]}` with terms ordered by
/// (q, r). The vertex count travels alongside because the one-vertex tree
/// has an empty polynomial.
pub fn poly_json(n: usize, p: &BivariatePoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(q, r, c)| json!([q, r, c.to_string()]))
        .collect();
    json!({ "n": n, "terms": terms })
}

pub fn poly_from_json(v: &Value) -> Result<(usize, BivariatePoly), JsonError> {
    let obj = v.as_object().ok_or(JsonError::NotAnObject)?;
    let n = obj
        .get("n")
        .and_then(Value::as_u64)
        .ok_or(JsonError::Field("n"))? as usize;
    let terms = obj
        .get("terms")
        .and_then(Value::as_array)
        .ok_or(JsonError::Field("terms"))?;
    let mut p = BivariatePoly::new();
    for term in terms {
        let triple = term
            .as_array()
            .filter(|a| a.len() == 3)
            .ok_or(JsonError::Field("terms"))?;
        let q = triple[0].as_u64().ok_or(JsonError::Field("terms"))? as u32;
        let r = triple[1].as_u64().ok_or(JsonError::Field("terms"))? as u32;
        let text = triple[2].as_str().ok_or(JsonError::Field("terms"))?;
        let coeff = BigUint::parse_bytes(text.as_bytes(), 10)
            .ok_or_else(|| JsonError::Coefficient(text.to_string()))?;
        p.add_term(q, r, coeff);
    }
    Ok((n, p))
}

/// `{"basis": "powersum", "n": .., "terms": [[[parts..], "coeff"], ..]}`
/// with partitions in descending lexicographic order.
pub fn csf_json(f: &PowerSumFunction) -> Value {
    let terms: Vec<Value> = f
        .terms()
        .map(|(partition, c)| json!([partition.parts(), c.to_string()]))
        .collect();
    json!({ "n": f.degree(), "basis": "powersum", "terms": terms })
}

pub fn profile_json(p: &RecoveredProfile) -> Value {
    let kind = match p.kind {
        ProfileKind::Standard => "standard",
        ProfileKind::Path => "path",
    };
    json!({
        "kind": kind,
        "n": p.n,
        "leaves": p.leaves,
        "trunk_size": p.trunk_size,
        "twigs": p.twig_lengths,
    })
}

pub fn decomposition_json(d: &Decomposition) -> Value {
    let twigs: Vec<Value> = d
        .twigs
        .iter()
        .map(|t| json!({ "attach": t.attachment, "path": t.path, "length": t.length() }))
        .collect();
    json!({ "trunk": d.trunk, "twigs": twigs, "degenerate": d.degenerate })
}

pub fn scan_report_json(r: &ScanReport) -> Value {
    let collisions: Vec<Value> = r.collisions.iter().map(|(a, b)| json!([a, b])).collect();
    json!({
        "n": r.n,
        "tree_count": r.tree_count,
        "invariant": r.invariant.name(),
        "collisions": collisions,
        "elapsed_ms": r.elapsed.as_millis() as u64,
    })
}

pub fn roundtrip_report_json(r: &RoundtripReport) -> Value {
    json!({
        "n_max": r.n_max,
        "trees": r.trees,
        "failures": r.failures,
        "summary": r.summary(),
    })
}

pub fn error_json(code: &str, detail: &str) -> Value {
    json!({ "error": code, "detail": detail })
}

/// The edge-list text format `parse` reads back: vertex count, then one
/// "u v" line per edge.
pub fn edge_list_text(t: &Tree) -> String {
    use std::fmt::Write;
    let mut out = format!("{}\n", t.n());
    for (u, v) in t.edges() {
        writeln!(out, "{u} {v}").expect("string write");
    }
    out
}
