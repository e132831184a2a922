//! JSON algebra description files.
//!
//! ```json
//! {
//!   "name": "heisenberg3",
//!   "dim": 3,
//!   "brackets": [{ "i": 1, "j": 2, "terms": { "3": 1.0 } }],
//!   "metric": [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]
//! }
//! ```
//!
//! Indices are 1-based. `basis`, `complex_structure`, `contact` and
//! `subalgebras` are optional. Matrices are lists of rows acting on coordinate
//! columns.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{InnerProduct, LieAlgebra, SubspaceBasis};
use crate::complex::AlmostContactStructure;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub name: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default)]
    pub brackets: Vec<BracketSpec>,
    pub metric: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complex_structure: Option<Vec<Vec<f64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub contact: Option<ContactSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub subalgebras: Vec<SubalgebraSpec>,
}

/// `[e_i, e_j] = sum_k terms[k] e_k`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketSpec {
    pub i: usize,
    pub j: usize,
    pub terms: BTreeMap<usize, f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContactSpec {
    pub phi: Vec<Vec<f64>>,
    pub xi: Vec<f64>,
    pub eta: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubalgebraSpec {
    pub name: String,
    pub vectors: Vec<Vec<f64>>,
}

/// Optional structures carried alongside the algebra and metric.
#[derive(Debug, Clone, Default)]
pub struct Extras {
    pub complex_structure: Option<Matrix>,
    pub contact: Option<AlmostContactStructure>,
    pub subalgebras: Vec<(String, SubspaceBasis)>,
}

/// A validated description file.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub name: String,
    pub alg: LieAlgebra,
    pub metric: InnerProduct,
    pub extras: Extras,
}

impl SpecFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json())?;
        Ok(())
    }

    /// Pretty JSON with numeric rows kept on one line; ends with a newline.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("spec serializes");
        let mut out = String::new();
        write_value(&mut out, &value, 0);
        out.push('\n');
        out
    }

    /// Validates the file and builds the algebra, metric and extras.
    pub fn load(&self) -> Result<Loaded> {
        let n = self.dim;
        if n == 0 {
            return Err(Error::Invalid("dim must be positive".into()));
        }
        let mut entries = Vec::new();
        for b in &self.brackets {
            let i = one_based(b.i, n)?;
            let j = one_based(b.j, n)?;
            for (&k, &c) in &b.terms {
                entries.push((i, j, one_based(k, n)?, c));
            }
        }
        let alg = LieAlgebra::from_brackets(n, self.basis.clone(), entries)?;
        let metric = InnerProduct::new(square(&self.metric, n, "metric")?)?;
        let complex_structure = match &self.complex_structure {
            Some(rows) => Some(square(rows, n, "complex_structure")?),
            None => None,
        };
        let contact = match &self.contact {
            Some(c) => Some(AlmostContactStructure::new(
                square(&c.phi, n, "contact.phi")?,
                vector(&c.xi, n)?,
                vector(&c.eta, n)?,
            )?),
            None => None,
        };
        let mut subalgebras = Vec::new();
        for s in &self.subalgebras {
            let vs = s.vectors.iter().map(|v| vector(v, n)).collect::<Result<Vec<_>>>()?;
            subalgebras.push((s.name.clone(), SubspaceBasis::new(n, vs)?));
        }
        Ok(Loaded {
            name: self.name.clone(),
            alg,
            metric,
            extras: Extras {
                complex_structure,
                contact,
                subalgebras,
            },
        })
    }

    /// Describes an algebra and metric, with optional extras.
    pub fn from_parts(name: &str, alg: &LieAlgebra, metric: &InnerProduct, extras: &Extras) -> Self {
        let n = alg.dim();
        let mut grouped: BTreeMap<(usize, usize), BTreeMap<usize, f64>> = BTreeMap::new();
        for (i, j, k, c) in alg.nonzero_constants() {
            grouped.entry((i + 1, j + 1)).or_default().insert(k + 1, c);
        }
        let default_names: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
        SpecFile {
            name: name.to_string(),
            dim: n,
            basis: (alg.names() != default_names.as_slice()).then(|| alg.names().to_vec()),
            brackets: grouped
                .into_iter()
                .map(|((i, j), terms)| BracketSpec { i, j, terms })
                .collect(),
            metric: rows(metric.gram()),
            complex_structure: extras.complex_structure.as_ref().map(rows),
            contact: extras.contact.as_ref().map(|c| ContactSpec {
                phi: rows(&c.phi),
                xi: c.xi.iter().copied().collect(),
                eta: c.eta.iter().copied().collect(),
            }),
            subalgebras: extras
                .subalgebras
                .iter()
                .map(|(name, s)| SubalgebraSpec {
                    name: name.clone(),
                    vectors: s.vectors().iter().map(|v| v.iter().copied().collect()).collect(),
                })
                .collect(),
        }
    }
}

/// Reads, parses and validates a description file.
pub fn load_algebra(path: impl AsRef<Path>) -> Result<Loaded> {
    SpecFile::read(path)?.load()
}

fn one_based(idx: usize, n: usize) -> Result<usize> {
    if idx == 0 || idx > n {
        return Err(Error::IndexOutOfRange { index: idx, dim: n });
    }
    Ok(idx - 1)
}

fn square(rows: &[Vec<f64>], n: usize, what: &str) -> Result<Matrix> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Invalid(format!("{what} must be a {n}x{n} matrix")));
    }
    Ok(Matrix::from_fn(n, n, |r, c| rows[r][c]))
}

fn vector(v: &[f64], n: usize) -> Result<Vector> {
    if v.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: v.len(),
        });
    }
    Ok(Vector::from_column_slice(v))
}

fn rows(m: &Matrix) -> Vec<Vec<f64>> {
    (0..m.nrows()).map(|r| m.row(r).iter().copied().collect()).collect()
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

/// Flat arrays, and small objects of scalars or such objects, fit on one line.
fn fits_inline(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(is_scalar),
        Value::Object(map) => {
            map.len() <= 4
                && map
                    .values()
                    .all(|x| is_scalar(x) || (matches!(x, Value::Object(_)) && fits_inline(x)))
        }
        _ => true,
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(inline).collect();
            format!("[{}]", parts.join(", "))
        }
        Value::Object(map) if map.is_empty() => "{}".into(),
        Value::Object(map) => {
            let parts: Vec<String> = map
                .iter()
                .map(|(k, x)| format!("{}: {}", Value::String(k.clone()), inline(x)))
                .collect();
            format!("{{ {} }}", parts.join(", "))
        }
        scalar => scalar.to_string(),
    }
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = |k: usize| "  ".repeat(k);
    match v {
        v if fits_inline(v) => out.push_str(&inline(v)),
        Value::Array(items) => {
            out.push_str("[\n");
            for (idx, item) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(out, item, indent + 1);
                if idx + 1 < items.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(map) => {
            out.push_str("{\n");
            for (idx, (k, item)) in map.iter().enumerate() {
                let _ = write!(out, "{}{}: ", pad(indent + 1), Value::String(k.clone()));
                write_value(out, item, indent + 1);
                if idx + 1 < map.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        _ => unreachable!("scalars fit inline"),
    }
}
