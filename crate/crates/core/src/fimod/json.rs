//! The FI-module interchange format.
//!
//! ```json
//! {"name": "...", "max_degree": K, "generation_bound": g, "dims": [d0, …, dK],
//!  "transpositions": {"2": [M], "3": [M, M], …}, "inclusions": [M, …]}
//! ```
//! where a matrix `M` is `{"rows": r, "cols": c, "entries": [...]}` in row-major order and
//! each entry is an integer or a string `"p/q"` in lowest terms.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::module::FiModule;
use crate::error::{Error, Result};
use crate::exactla::{Rational, SparseMatrix, SparseVec};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModuleFile {
    name: String,
    max_degree: usize,
    generation_bound: usize,
    dims: Vec<usize>,
    transpositions: BTreeMap<String, Vec<MatrixFile>>,
    inclusions: Vec<MatrixFile>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixFile {
    rows: usize,
    cols: usize,
    entries: Vec<Entry>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Entry {
    Int(i64),
    Text(String),
}

fn schema(msg: impl Into<String>) -> Error {
    Error::Schema(msg.into())
}

fn parse_entry(e: &Entry) -> Result<Rational> {
    match e {
        Entry::Int(i) => Ok(Rational::from_integer((*i).into())),
        Entry::Text(s) => {
            let (p, q) = match s.split_once('/') {
                Some((p, q)) => (p, q),
                None => (s.as_str(), "1"),
            };
            let p: BigInt = p.trim().parse().map_err(|_| schema(format!("entry '{s}' is not an integer or p/q")))?;
            let q: BigInt = q.trim().parse().map_err(|_| schema(format!("entry '{s}' is not an integer or p/q")))?;
            if q <= BigInt::zero() {
                return Err(schema(format!("entry '{s}' has a non-positive denominator")));
            }
            if !p.gcd(&q).is_one() && !(p.is_zero() && q.is_one()) {
                return Err(schema(format!("entry '{s}' is not in lowest terms")));
            }
            Ok(Rational::new_raw(p, q))
        }
    }
}

fn render_entry(x: &Rational) -> Entry {
    if x.is_integer() {
        if let Some(i) = x.numer().to_i64() {
            return Entry::Int(i);
        }
    }
    Entry::Text(format!("{}/{}", x.numer(), x.denom()))
}

fn read_matrix(m: &MatrixFile, what: &str) -> Result<SparseMatrix> {
    if m.entries.len() != m.rows * m.cols {
        return Err(schema(format!("{what}: {} entries for a {}x{} matrix", m.entries.len(), m.rows, m.cols)));
    }
    let mut columns = vec![SparseVec::new(); m.cols];
    for (idx, e) in m.entries.iter().enumerate() {
        let x = parse_entry(e).map_err(|err| schema(format!("{what}: {err}")))?;
        if !x.is_zero() {
            columns[idx % m.cols].insert(idx / m.cols, x);
        }
    }
    Ok(SparseMatrix::from_columns(m.rows, columns))
}

fn write_matrix(m: &SparseMatrix) -> MatrixFile {
    let mut entries = Vec::with_capacity(m.rows() * m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            entries.push(render_entry(&m.get(i, j)));
        }
    }
    MatrixFile { rows: m.rows(), cols: m.cols(), entries }
}

/// Parses and shape-checks a module; relations are left to [`super::validate`].
pub fn from_json(text: &str) -> Result<FiModule> {
    let file: ModuleFile = serde_json::from_str(text).map_err(|e| schema(e.to_string()))?;
    let k_max = file.max_degree;
    if file.dims.len() != k_max + 1 {
        return Err(schema(format!("max_degree {k_max} but {} dims", file.dims.len())));
    }
    let expected: Vec<String> = (2..=k_max).map(|k| k.to_string()).collect();
    let mut found: Vec<&String> = file.transpositions.keys().collect();
    found.sort_by_key(|s| s.parse::<usize>().unwrap_or(usize::MAX));
    if found.iter().map(|s| s.as_str()).ne(expected.iter().map(String::as_str)) {
        return Err(schema(format!("transpositions must be keyed by \"2\"..\"{k_max}\", found {found:?}")));
    }
    let mut transpositions = vec![Vec::new(), Vec::new()];
    transpositions.truncate(k_max + 1);
    for k in 2..=k_max {
        let list = &file.transpositions[&k.to_string()];
        let mats = list
            .iter()
            .enumerate()
            .map(|(i, m)| read_matrix(m, &format!("s_{} in degree {k}", i + 1)))
            .collect::<Result<Vec<_>>>()?;
        transpositions.push(mats);
    }
    let inclusions = file
        .inclusions
        .iter()
        .enumerate()
        .map(|(k, m)| read_matrix(m, &format!("inclusion {k}")))
        .collect::<Result<Vec<_>>>()?;
    FiModule::new(file.name, file.generation_bound, file.dims, transpositions, inclusions)
        .map_err(|e| schema(e.to_string()))
}

/// Serializes a module; the output is deterministic.
pub fn to_json(e: &FiModule) -> String {
    let transpositions = (2..=e.max_degree())
        .map(|k| (k.to_string(), e.transpositions(k).iter().map(write_matrix).collect()))
        .collect();
    let file = ModuleFile {
        name: e.name().to_string(),
        max_degree: e.max_degree(),
        generation_bound: e.generation_bound(),
        dims: e.dims().to_vec(),
        transpositions,
        inclusions: (0..e.max_degree()).map(|k| write_matrix(e.inclusion(k))).collect(),
    };
    serde_json::to_string_pretty(&file).expect("serializable")
}
