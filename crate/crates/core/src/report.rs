//! Check reports shared by every module and the CLI.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub location: String,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Ordered list of check outcomes plus free-form notes (for example which
/// optional inputs were assumed zero). Order is insertion order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub results: Vec<CheckResult>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn pass(&mut self, id: &str, location: impl Into<String>) {
        self.push(id, location, Verdict::Pass, None);
    }

    pub fn fail(&mut self, id: &str, location: impl Into<String>, witness: impl Into<String>) {
        self.push(id, location, Verdict::Fail, Some(witness.into()));
    }

    pub fn skip(&mut self, id: &str, location: impl Into<String>, why: impl Into<String>) {
        self.push(id, location, Verdict::Skipped, Some(why.into()));
    }

    /// Pass or fail depending on `ok`; the witness is only built on failure.
    pub fn check(
        &mut self,
        id: &str,
        location: impl Into<String>,
        ok: bool,
        witness: impl FnOnce() -> String,
    ) {
        if ok {
            self.pass(id, location);
        } else {
            self.fail(id, location, witness());
        }
    }

    pub fn note(&mut self, text: impl Into<String>) {
        let text = text.into();
        if !self.notes.contains(&text) {
            self.notes.push(text);
        }
    }

    fn push(&mut self, id: &str, location: impl Into<String>, verdict: Verdict, witness: Option<String>) {
        self.results.push(CheckResult {
            id: id.to_string(),
            location: location.into(),
            verdict,
            witness,
        });
    }

    pub fn extend(&mut self, other: Report) {
        self.results.extend(other.results);
        for n in other.notes {
            self.note(n);
        }
    }

    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.verdict != Verdict::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| r.verdict == Verdict::Fail)
    }

    /// Verdict of the first result with this id and location.
    pub fn verdict(&self, id: &str, location: &str) -> Option<Verdict> {
        self.results
            .iter()
            .find(|r| r.id == id && r.location == location)
            .map(|r| r.verdict)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            let v = match r.verdict {
                Verdict::Pass => "pass",
                Verdict::Fail => "FAIL",
                Verdict::Skipped => "skip",
            };
            write!(f, "{v:<4}  {:<28} {}", r.id, r.location)?;
            if let Some(w) = &r.witness {
                write!(f, "  [{w}]")?;
            }
            writeln!(f)?;
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        Ok(())
    }
}

/// Serde adapter for maps with integer keys that may pass through
/// buffered (flattened or tagged) deserialization, where JSON object keys
/// stay strings.
pub(crate) mod int_keys {
    use std::collections::BTreeMap;
    use std::fmt::Display;
    use std::str::FromStr;

    use serde::de::Error;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<K: Display, V: Serialize, S: Serializer>(m: &BTreeMap<K, V>, s: S) -> Result<S::Ok, S::Error> {
        s.collect_map(m.iter().map(|(k, v)| (k.to_string(), v)))
    }

    pub fn deserialize<'de, K, V, D>(d: D) -> Result<BTreeMap<K, V>, D::Error>
    where
        K: FromStr + Ord,
        K::Err: Display,
        V: Deserialize<'de>,
        D: Deserializer<'de>,
    {
        BTreeMap::<String, V>::deserialize(d)?
            .into_iter()
            .map(|(k, v)| k.parse().map(|k| (k, v)).map_err(|e| D::Error::custom(format!("key {k:?}: {e}"))))
            .collect()
    }
}
