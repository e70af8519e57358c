//! JSON shapes for everything the CLI prints.

use elnet::exactla::fmt_rational;
use elnet::{PlueckerVector, RatMatrix};
use serde_json::{json, Value};

pub fn matrix(m: &RatMatrix) -> Value {
    let rows: Vec<Vec<String>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(fmt_rational).collect())
        .collect();
    json!(rows)
}

/// All coordinates in lexicographic subset order, plus the same vector scaled
/// so the first nonzero coordinate is 1.
pub fn pluecker(p: &PlueckerVector, method: &str) -> Value {
    let subsets: Vec<Vec<usize>> = p.index().iter().collect();
    let coords =
        |v: &PlueckerVector| -> Vec<String> { v.coords.iter().map(fmt_rational).collect() };
    json!({
        "what": "pluecker",
        "method": method,
        "ambient": p.n,
        "k": p.k,
        "subsets": subsets,
        "coordinates": coords(p),
        "normalized": coords(&p.normalized()),
    })
}

pub fn sparse(p: &PlueckerVector) -> Value {
    let entries: Vec<Value> = p
        .support()
        .into_iter()
        .map(|(s, v)| json!({"subset": s, "value": fmt_rational(&v)}))
        .collect();
    json!(entries)
}

pub fn emit(value: &Value, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(value).expect("json values serialize")
    } else {
        value.to_string()
    }
}
