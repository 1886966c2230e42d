//! JSON formats: matroid descriptions in, reports out.
//!
//! A description is an object with a `"kind"` and kind-specific fields:
//!
//! ```json
//! {"kind": "uniform", "rank": 2, "size": 4}
//! {"kind": "graphic", "vertices": 3, "edges": [[0, 1], [1, 2], [0, 2]]}
//! {"kind": "matrix", "columns": [[2, 0], [0, 3]]}
//! {"kind": "explicit", "size": 1, "rank": {"": 0, "0": 1}, "multiplicity": {"": 1, "0": 2}}
//! ```
//!
//! Tables are objects keyed by subset keys: ascending element indices joined
//! by commas, `""` for the empty set. Every one of the `2^n` keys must be
//! present unless a `"default"` object supplies fill values. Integers may be
//! written as JSON numbers or decimal strings; emitted integers beyond
//! `i64` are strings.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::constructors::MatroidSpec;
use crate::corpus::{Check, CheckRecord, CorpusReport};
use crate::matroid::AxiomReport;
use crate::subset::Subset;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("malformed document at line {line}, column {column}: {message}")]
    MalformedDocument {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown kind {0:?}; expected one of uniform, graphic, matrix, explicit")]
    UnknownKind(String),
    #[error("bad subset key {key:?} in \"{field}\": {reason}")]
    BadSubsetKey {
        field: &'static str,
        key: String,
        reason: String,
    },
    #[error("\"{field}\" has {found} of {expected} entries and no default")]
    TableSizeMismatch {
        field: &'static str,
        expected: usize,
        found: usize,
    },
}

fn malformed(e: serde_json::Error) -> SpecError {
    SpecError::MalformedDocument {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

fn malformed_at(message: &str) -> SpecError {
    SpecError::MalformedDocument {
        line: 1,
        column: 1,
        message: message.to_owned(),
    }
}

/// An integer written as a JSON number or a decimal string.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
enum Int {
    Signed(i64),
    Unsigned(u64),
    Text(String),
}

impl Int {
    fn to_bigint(&self) -> Result<BigInt, String> {
        match self {
            Int::Signed(v) => Ok((*v).into()),
            Int::Unsigned(v) => Ok((*v).into()),
            Int::Text(s) => s
                .parse()
                .map_err(|_| format!("{s:?} is not a decimal integer")),
        }
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct Defaults {
    rank: Option<u32>,
    multiplicity: Option<Int>,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum Document {
    Uniform {
        rank: usize,
        size: usize,
        multiplicity: Option<BTreeMap<String, Int>>,
        default: Option<Defaults>,
    },
    Graphic {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
    Matrix {
        columns: Vec<Vec<Int>>,
    },
    Explicit {
        size: usize,
        rank: BTreeMap<String, u32>,
        multiplicity: BTreeMap<String, Int>,
        default: Option<Defaults>,
    },
}

const KINDS: [&str; 4] = ["uniform", "graphic", "matrix", "explicit"];

/// Parses a subset key against a ground set of `size` elements.
pub fn parse_subset_key(key: &str, size: usize) -> Result<Subset, String> {
    if key.is_empty() {
        return Ok(Subset::EMPTY);
    }
    let mut out = Subset::EMPTY;
    let mut last: Option<usize> = None;
    for part in key.split(',') {
        if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("{part:?} is not an element index"));
        }
        if part.len() > 1 && part.starts_with('0') {
            return Err(format!("{part:?} has a leading zero"));
        }
        let e: usize = part
            .parse()
            .map_err(|_| format!("{part:?} is out of range"))?;
        if e >= size {
            return Err(format!("element {e} is not below size {size}"));
        }
        if last.is_some_and(|l| l >= e) {
            return Err("elements must be strictly ascending".into());
        }
        last = Some(e);
        out = out.with(e);
    }
    Ok(out)
}

fn table<T: Clone, R>(
    field: &'static str,
    size: usize,
    entries: &BTreeMap<String, R>,
    fill: Option<T>,
    convert: impl Fn(&R) -> Result<T, String>,
) -> Result<Vec<T>, SpecError> {
    if size > 63 {
        return Err(malformed_at(&format!("size {size} exceeds 63")));
    }
    let expected = 1usize << size;
    let mut slots: Vec<Option<T>> = vec![None; expected];
    for (key, raw) in entries {
        let set = parse_subset_key(key, size).map_err(|reason| SpecError::BadSubsetKey {
            field,
            key: key.clone(),
            reason,
        })?;
        let value = convert(raw).map_err(|reason| SpecError::BadSubsetKey {
            field,
            key: key.clone(),
            reason,
        })?;
        slots[set.index()] = Some(value);
    }
    let found = slots.iter().filter(|s| s.is_some()).count();
    match fill {
        Some(f) => Ok(slots
            .into_iter()
            .map(|s| s.unwrap_or_else(|| f.clone()))
            .collect()),
        None if found == expected => Ok(slots.into_iter().flatten().collect()),
        None => Err(SpecError::TableSizeMismatch {
            field,
            expected,
            found,
        }),
    }
}

fn fill_mult(defaults: &Option<Defaults>) -> Result<Option<BigInt>, SpecError> {
    defaults
        .as_ref()
        .and_then(|d| d.multiplicity.as_ref())
        .map(|i| {
            i.to_bigint()
                .map_err(|m| malformed_at(&format!("default multiplicity: {m}")))
        })
        .transpose()
}

/// Parses a description. Key syntax and table completeness are checked
/// here; matroid axioms and positivity are checked when the spec is built.
pub fn parse_spec(document: &str) -> Result<MatroidSpec, SpecError> {
    let value: Value = serde_json::from_str(document).map_err(malformed)?;
    let kind = match value.get("kind") {
        Some(Value::String(k)) => k.clone(),
        Some(_) => return Err(malformed_at("\"kind\" must be a string")),
        None => return Err(malformed_at("missing field \"kind\"")),
    };
    if !KINDS.contains(&kind.as_str()) {
        return Err(SpecError::UnknownKind(kind));
    }
    let doc: Document = serde_json::from_str(document).map_err(malformed)?;
    let int = |i: &Int| i.to_bigint();
    Ok(match doc {
        Document::Uniform {
            rank,
            size,
            multiplicity,
            default,
        } => {
            let multiplicity = match multiplicity {
                Some(entries) => Some(table(
                    "multiplicity",
                    size,
                    &entries,
                    fill_mult(&default)?,
                    int,
                )?),
                None => None,
            };
            MatroidSpec::Uniform {
                rank,
                size,
                multiplicity,
            }
        }
        Document::Graphic { vertices, edges } => MatroidSpec::Graphic { vertices, edges },
        Document::Matrix { columns } => {
            let columns = columns
                .iter()
                .map(|c| c.iter().map(int).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|m| malformed_at(&format!("columns: {m}")))?;
            MatroidSpec::Matrix { columns }
        }
        Document::Explicit {
            size,
            rank,
            multiplicity,
            default,
        } => {
            let fill_rank = default.as_ref().and_then(|d| d.rank);
            let rank = table("rank", size, &rank, fill_rank, |r| Ok(*r))?;
            let multiplicity = table(
                "multiplicity",
                size,
                &multiplicity,
                fill_mult(&default)?,
                int,
            )?;
            MatroidSpec::Explicit {
                size,
                rank,
                multiplicity,
            }
        }
    })
}

/// A JSON number when it fits in `i64`, a decimal string otherwise.
pub fn int_value(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(small) => Value::from(small),
        Err(_) => Value::String(v.to_string()),
    }
}

fn keyed<T>(values: &[T], f: impl Fn(&T) -> Value) -> Value {
    let map: Map<String, Value> = values
        .iter()
        .enumerate()
        .map(|(i, v)| (Subset(i as u64).key(), f(v)))
        .collect();
    Value::Object(map)
}

/// The JSON form of a spec, with complete tables.
pub fn spec_to_json(spec: &MatroidSpec) -> Value {
    match spec {
        MatroidSpec::Uniform {
            rank,
            size,
            multiplicity,
        } => {
            let mut v = json!({"kind": "uniform", "rank": rank, "size": size});
            if let Some(m) = multiplicity {
                v["multiplicity"] = keyed(m, int_value);
            }
            v
        }
        MatroidSpec::Graphic { vertices, edges } => {
            json!({"kind": "graphic", "vertices": vertices, "edges": edges})
        }
        MatroidSpec::Matrix { columns } => {
            let columns: Vec<Vec<Value>> = columns
                .iter()
                .map(|c| c.iter().map(int_value).collect())
                .collect();
            json!({"kind": "matrix", "columns": columns})
        }
        MatroidSpec::Explicit {
            size,
            rank,
            multiplicity,
        } => json!({
            "kind": "explicit",
            "size": size,
            "rank": keyed(rank, |r| Value::from(*r)),
            "multiplicity": keyed(multiplicity, int_value),
        }),
    }
}

pub fn emit_spec(spec: &MatroidSpec) -> String {
    serde_json::to_string_pretty(&spec_to_json(spec)).expect("JSON values serialize")
}

/// One identity check as written to a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matroid: Option<String>,
    pub identity: String,
    pub equal: bool,
    /// `"exact"` or `"sampled"`.
    pub mode: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs1: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs2: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportError {
    pub matroid: String,
    pub error: String,
}

/// `pass` is true iff every entry is equal and `errors` is empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDocument {
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub entries: Vec<ReportEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub errors: Vec<ReportError>,
}

impl ReportEntry {
    /// With `timings`, the elapsed time is recorded; without it the entry
    /// depends only on the input.
    pub fn from_check(subject: Option<&str>, check: &Check, timings: bool) -> ReportEntry {
        let millis = timings.then(|| check.elapsed().as_millis() as u64);
        let matroid = subject.map(str::to_owned);
        match check {
            Check::Exact(r) => ReportEntry {
                matroid,
                identity: r.identity.name().to_owned(),
                equal: r.equal,
                mode: "exact".into(),
                lhs: Some(r.lhs.canonical_string()),
                rhs1: Some(r.rhs_first.canonical_string()),
                rhs2: r.rhs_second.as_ref().map(|p| p.canonical_string()),
                points: None,
                millis,
            },
            Check::Sampled(r) => ReportEntry {
                matroid,
                identity: r.identity.name().to_owned(),
                equal: r.equal(),
                mode: "sampled".into(),
                lhs: None,
                rhs1: None,
                rhs2: None,
                points: Some(r.points),
                millis,
            },
        }
    }
}

impl ReportDocument {
    pub fn new(entries: Vec<ReportEntry>, errors: Vec<ReportError>, seed: Option<u64>) -> Self {
        let pass = errors.is_empty() && entries.iter().all(|e| e.equal);
        ReportDocument {
            pass,
            seed,
            entries,
            errors,
        }
    }

    pub fn from_records(records: &[CheckRecord], timings: bool) -> Self {
        let entries = records
            .iter()
            .map(|r| ReportEntry::from_check(Some(&r.subject), &r.check, timings))
            .collect();
        ReportDocument::new(entries, Vec::new(), None)
    }

    pub fn from_corpus(report: &CorpusReport, seed: Option<u64>, timings: bool) -> Self {
        let entries = report
            .records()
            .map(|r| ReportEntry::from_check(Some(&r.subject), &r.check, timings))
            .collect();
        let errors = report
            .errors()
            .map(|(name, e)| ReportError {
                matroid: name.to_owned(),
                error: e.to_string(),
            })
            .collect();
        ReportDocument::new(entries, errors, seed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// `{"matroid": .., "axiom1": .., .., "arithmetic": bool}`; a `null` entry
/// means that condition holds.
pub fn axiom_report_json(report: &AxiomReport) -> Value {
    let mut v = serde_json::to_value(report).expect("axiom report serializes");
    v["arithmetic"] = Value::Bool(report.all_hold());
    v
}
