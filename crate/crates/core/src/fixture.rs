//! On-disk fixture format: a versioned JSON envelope around one kind of
//! input. Rationals inside matrices are `"num/den"` strings.
//!
//! ```json
//! { "version": 1, "name": "kodaira-I1", "note": "...",
//!   "kind": "degeneration", "data": { ... } }
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::degeneration::{DegenerationError, DegenerationFixture, LocalSystemData, ShiodaInputs, TailStrata};
use crate::hodge::HodgeDeligneDiagram;
use crate::polydisk::StrataInput;
use crate::quiver::{DiskQuiverRep, IndecompSummand};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("schema error at line {line}, column {column}: {message}")]
    Schema { line: usize, column: usize, message: String },
    #[error("unsupported format version {0} (expected {FORMAT_VERSION})")]
    Version(u32),
    #[error(transparent)]
    Degeneration(#[from] DegenerationError),
    #[error("{0}")]
    Invalid(String),
}

impl From<serde_json::Error> for FixtureError {
    fn from(e: serde_json::Error) -> Self {
        let message = e.to_string();
        // serde_json appends the location; keep the message readable.
        let message = match message.rfind(" at line ") {
            Some(i) => message[..i].to_string(),
            None => message,
        };
        FixtureError::Schema {
            line: e.line(),
            column: e.column(),
            message,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureFile {
    pub version: u32,
    pub name: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
    #[serde(flatten)]
    pub body: FixtureBody,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "data", rename_all = "snake_case")]
pub enum FixtureBody {
    Degeneration(DegenerationFixture),
    Quiver(QuiverFixture),
    MultiParameter(MultiParameterFixture),
    LocalSystem(LocalSystemFixture),
    Tail(TailFixture),
}

impl FixtureBody {
    pub fn kind(&self) -> &'static str {
        match self {
            FixtureBody::Degeneration(_) => "degeneration",
            FixtureBody::Quiver(_) => "quiver",
            FixtureBody::MultiParameter(_) => "multi_parameter",
            FixtureBody::LocalSystem(_) => "local_system",
            FixtureBody::Tail(_) => "tail",
        }
    }
}

/// Expected outcomes recorded next to a quiver representation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverExpectations {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decomposes: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub summands: Option<Vec<(IndecompSummand, u64)>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverFixture {
    pub rep: DiskQuiverRep,
    #[serde(default, skip_serializing_if = "is_default")]
    pub expect: QuiverExpectations,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiParameterFixture {
    pub strata: StrataInput,
    /// Degrees `m` in which to assemble `IH^m`.
    pub degrees: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalSystemFixture {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub system: Option<LocalSystemData>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_rank: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shioda: Option<ShiodaInputs>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_total: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TailFixture {
    pub strata: TailStrata,
    pub vanishing: HodgeDeligneDiagram,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_milnor: Option<i64>,
}

fn is_default<T: Default + PartialEq>(t: &T) -> bool {
    *t == T::default()
}

impl FixtureFile {
    pub fn new(name: impl Into<String>, body: FixtureBody) -> Self {
        FixtureFile {
            version: FORMAT_VERSION,
            name: name.into(),
            note: String::new(),
            body,
        }
    }

    pub fn parse_str(text: &str) -> Result<Self, FixtureError> {
        let f: FixtureFile = serde_json::from_str(text)?;
        if f.version != FORMAT_VERSION {
            return Err(FixtureError::Version(f.version));
        }
        f.validate()?;
        Ok(f)
    }

    pub fn validate(&self) -> Result<(), FixtureError> {
        match &self.body {
            FixtureBody::Degeneration(d) => d.validate()?,
            FixtureBody::MultiParameter(m) => {
                for e in &m.strata.entries {
                    if let Some(j) = e.subset.iter().find(|&&j| j == 0 || j > m.strata.r) {
                        return Err(FixtureError::Invalid(format!("stratum index {j} outside 1..={}", m.strata.r)));
                    }
                    if e.lmhs.as_ref().is_some_and(|h| h.r() != m.strata.r) {
                        return Err(FixtureError::Invalid(format!("stratum {:?}: lmhs has the wrong r", e.subset)));
                    }
                }
            }
            _ => {}
        }
        Ok(())
    }

    /// Indented JSON, with short containers kept on one line.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("fixtures serialize");
        let mut out = String::new();
        write_value(&value, 0, &mut out);
        out.push('\n');
        out
    }
}

const WIDTH: usize = 80;

/// One-line rendering with a space after commas and colons.
fn inline(v: &serde_json::Value) -> String {
    use serde_json::Value;
    match v {
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(inline).collect();
            format!("[{}]", parts.join(", "))
        }
        Value::Object(map) => {
            let parts: Vec<String> = map
                .iter()
                .map(|(k, item)| format!("{}: {}", serde_json::to_string(k).unwrap(), inline(item)))
                .collect();
            format!("{{{}}}", parts.join(", "))
        }
        scalar => serde_json::to_string(scalar).unwrap(),
    }
}

/// Nested containers that fit on the current line stay on it.
fn write_value(v: &serde_json::Value, indent: usize, out: &mut String) {
    use serde_json::Value;
    let pad = |n: usize| "  ".repeat(n);
    let one_line = inline(v);
    let column = out.len() - out.rfind('\n').map_or(0, |i| i + 1);
    if indent > 0 && column + one_line.len() <= WIDTH {
        out.push_str(&one_line);
        return;
    }
    match v {
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(item, indent + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, item)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&serde_json::to_string(k).unwrap());
                out.push_str(": ");
                write_value(item, indent + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        _ => out.push_str(&one_line),
    }
}

pub fn parse_fixture(path: impl AsRef<Path>) -> Result<FixtureFile, FixtureError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| FixtureError::Io {
        path: path.display().to_string(),
        source,
    })?;
    FixtureFile::parse_str(&text)
}
