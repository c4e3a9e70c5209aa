//! The textual interchange format for Hopf algebras and Hopf subalgebras.
//!
//! A Hopf file is a JSON document with the keys, in this order:
//!
//! | key | shape |
//! |---|---|
//! | `name` | string |
//! | `dim` | integer `n` |
//! | `cyclotomic_order` | integer `N` |
//! | `mult` | `n×n` array of scalar vectors: `mult[i][j] = b_i b_j` |
//! | `unit` | scalar vector |
//! | `comult` | `n` matrices: `Δ(b_i) = Σ comult[i][j][k] b_j⊗b_k` |
//! | `counit` | scalar vector |
//! | `antipode` | `n×n` matrix: row `i` is `S(b_i)` |
//! | `r_matrix` | optional scalar vector of length `n²` |
//! | `grouplike_indices` | optional list of basis indices |
//!
//! A scalar is a rational string (`"-3/2"`) or an array of `φ(N)` rational
//! strings giving coordinates in the power basis of ℚ(ζ_N). Writers emit the
//! string form whenever the scalar is rational.
//!
//! A subalgebra file (`.sub`) holds either `{"indices": [...]}`, the span of
//! those basis elements, or `{"vectors": [...]}`, the span of scalar vectors.

mod catalog;

pub use catalog::{catalog, CatalogEntry, D4_ROTATIONS};

use std::fmt::Write as _;

use serde::Deserialize;
use serde_json::Value;
use thiserror::Error;

use crate::hopf::{HopfAlgebra, HopfError, HopfParts};
use crate::linalg::{SparseVec, Subspace};
use crate::scalars::{Cyclo, Rational};
use crate::substructures::{HopfSub, SubError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("key `{key}`: {message}")]
    Field { key: String, message: String },
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Sub(#[from] SubError),
}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        FormatError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

fn field(key: impl Into<String>, message: impl Into<String>) -> FormatError {
    FormatError::Field {
        key: key.into(),
        message: message.into(),
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ScalarText {
    Rational(String),
    Coords(Vec<String>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawHopf {
    name: String,
    dim: usize,
    cyclotomic_order: u32,
    mult: Vec<Vec<Vec<ScalarText>>>,
    unit: Vec<ScalarText>,
    comult: Vec<Vec<Vec<ScalarText>>>,
    counit: Vec<ScalarText>,
    antipode: Vec<Vec<ScalarText>>,
    #[serde(default)]
    r_matrix: Option<Vec<ScalarText>>,
    #[serde(default)]
    grouplike_indices: Option<Vec<usize>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSub {
    #[serde(default)]
    indices: Option<Vec<usize>>,
    #[serde(default)]
    vectors: Option<Vec<Vec<ScalarText>>>,
}

fn parse_scalar(s: &ScalarText, order: u32, key: &str) -> Result<Cyclo, FormatError> {
    match s {
        ScalarText::Rational(t) => t
            .parse::<Rational>()
            .map(|r| Cyclo::from_rational(order, r))
            .map_err(|e| field(key, e.to_string())),
        ScalarText::Coords(cs) => {
            let coeffs = cs
                .iter()
                .map(|t| t.parse::<Rational>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| field(key, e.to_string()))?;
            Cyclo::from_coeffs(order, coeffs).map_err(|e| field(key, e.to_string()))
        }
    }
}

fn parse_vector(v: &[ScalarText], len: usize, order: u32, key: &str) -> Result<SparseVec, FormatError> {
    if v.len() != len {
        return Err(field(key, format!("expected {len} entries, found {}", v.len())));
    }
    let dense = v
        .iter()
        .enumerate()
        .map(|(i, s)| parse_scalar(s, order, &format!("{key}[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SparseVec::from_dense(&dense))
}

fn parse_matrix(m: &[Vec<ScalarText>], n: usize, order: u32, key: &str) -> Result<Vec<SparseVec>, FormatError> {
    if m.len() != n {
        return Err(field(key, format!("expected {n} rows, found {}", m.len())));
    }
    m.iter()
        .enumerate()
        .map(|(i, row)| parse_vector(row, n, order, &format!("{key}[{i}]")))
        .collect()
}

/// Parses a Hopf file. Shapes are checked; the Hopf axioms are not.
pub fn parse_hopf(text: &str) -> Result<HopfAlgebra, FormatError> {
    let raw: RawHopf = serde_json::from_str(text)?;
    let n = raw.dim;
    let order = raw.cyclotomic_order;
    if n == 0 {
        return Err(field("dim", "must be positive"));
    }
    if order == 0 {
        return Err(field("cyclotomic_order", "must be positive"));
    }
    if raw.mult.len() != n {
        return Err(field("mult", format!("expected {n} rows, found {}", raw.mult.len())));
    }
    let mut mult = Vec::with_capacity(n * n);
    for (i, row) in raw.mult.iter().enumerate() {
        mult.extend(parse_matrix(row, n, order, &format!("mult[{i}]"))?);
    }
    if raw.comult.len() != n {
        return Err(field("comult", format!("expected {n} matrices, found {}", raw.comult.len())));
    }
    let comult = raw
        .comult
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let rows = parse_matrix(m, n, order, &format!("comult[{i}]"))?;
            let terms = rows
                .into_iter()
                .enumerate()
                .flat_map(|(j, row)| row.into_entries().into_iter().map(move |(k, c)| (j * n + k, c)))
                .collect();
            Ok(SparseVec::from_terms(terms))
        })
        .collect::<Result<Vec<_>, FormatError>>()?;
    let counit = parse_vector(&raw.counit, n, order, "counit")?.to_dense(n, order);
    let r_matrix = raw
        .r_matrix
        .as_deref()
        .map(|r| parse_vector(r, n * n, order, "r_matrix"))
        .transpose()?;
    if let Some(g) = &raw.grouplike_indices {
        if let Some(&bad) = g.iter().find(|&&i| i >= n) {
            return Err(field("grouplike_indices", format!("index {bad} out of range")));
        }
    }
    Ok(HopfAlgebra::from_parts(HopfParts {
        name: raw.name,
        dim: n,
        order,
        mult,
        unit: parse_vector(&raw.unit, n, order, "unit")?,
        comult,
        counit,
        antipode: parse_matrix(&raw.antipode, n, order, "antipode")?,
        r_matrix,
        grouplikes: raw.grouplike_indices,
    })?)
}

/// Parses a subalgebra file against `h` and certifies it as a Hopf subalgebra.
pub fn parse_sub(text: &str, h: &HopfAlgebra) -> Result<HopfSub, FormatError> {
    let raw: RawSub = serde_json::from_str(text)?;
    match (raw.indices, raw.vectors) {
        (Some(idx), None) => {
            if let Some(&bad) = idx.iter().find(|&&i| i >= h.dim()) {
                return Err(field("indices", format!("index {bad} out of range")));
            }
            Ok(HopfSub::from_basis_indices(h, &idx)?)
        }
        (None, Some(vectors)) => {
            let mut space = Subspace::zero(h.dim(), h.order());
            for (i, v) in vectors.iter().enumerate() {
                space.insert(parse_vector(v, h.dim(), h.order(), &format!("vectors[{i}]"))?);
            }
            Ok(HopfSub::certify(h, space)?)
        }
        _ => Err(field("indices", "give exactly one of `indices` and `vectors`")),
    }
}

fn scalar_value(c: &Cyclo) -> Value {
    match c.to_rational() {
        Some(r) => Value::String(r.to_string()),
        None => Value::Array(c.coeff_strings().into_iter().map(Value::String).collect()),
    }
}

fn vector_value(v: &SparseVec, len: usize, order: u32) -> Value {
    Value::Array(v.to_dense(len, order).iter().map(scalar_value).collect())
}

/// Writes `v`, breaking the outer `levels` array levels across lines.
fn write_value(out: &mut String, v: &Value, indent: usize, levels: usize) {
    match v {
        Value::Array(items) if levels > 0 => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&" ".repeat(indent + 2));
                write_value(out, item, indent + 2, levels - 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&" ".repeat(indent));
            out.push(']');
        }
        _ => out.push_str(&serde_json::to_string(v).expect("JSON values serialize")),
    }
}

/// Canonical text of `h`: fixed key order, one scalar vector per line.
pub fn write_hopf(h: &HopfAlgebra) -> String {
    let n = h.dim();
    let order = h.order();
    let mut entries: Vec<(&str, Value, usize)> = vec![
        ("name", Value::String(h.name().to_string()), 0),
        ("dim", n.into(), 0),
        ("cyclotomic_order", order.into(), 0),
        (
            "mult",
            Value::Array(
                (0..n)
                    .map(|i| Value::Array((0..n).map(|j| vector_value(h.mult_basis(i, j), n, order)).collect()))
                    .collect(),
            ),
            2,
        ),
        ("unit", vector_value(&h.one(), n, order), 0),
        (
            "comult",
            Value::Array(
                (0..n)
                    .map(|i| {
                        let d = h.comult_basis(i);
                        Value::Array((0..n).map(|j| vector_value(&d.slice(j * n, (j + 1) * n), n, order)).collect())
                    })
                    .collect(),
            ),
            2,
        ),
        ("counit", Value::Array(h.counit_vector().iter().map(scalar_value).collect()), 0),
        (
            "antipode",
            Value::Array((0..n).map(|i| vector_value(h.antipode_basis(i), n, order)).collect()),
            1,
        ),
    ];
    if let Some(r) = h.r_matrix() {
        entries.push(("r_matrix", vector_value(r, n * n, order), 0));
    }
    if let Some(g) = h.grouplikes() {
        entries.push(("grouplike_indices", g.iter().copied().collect(), 0));
    }
    let mut out = String::from("{\n");
    for (i, (key, value, levels)) in entries.iter().enumerate() {
        write!(out, "  \"{key}\": ").expect("writing to a String");
        write_value(&mut out, value, 2, *levels);
        out.push_str(if i + 1 < entries.len() { ",\n" } else { "\n" });
    }
    out.push_str("}\n");
    out
}

/// Text of a subalgebra file listing basis indices.
pub fn write_sub_indices(indices: &[usize]) -> String {
    format!("{{\"indices\": {}}}\n", serde_json::to_string(indices).expect("integers serialize"))
}

#[cfg(test)]
mod tests;
