use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::UniPoly;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SubAssertion {
    pub description: String,
    pub passed: bool,
    pub witness: Value,
}

/// Pass/fail record of one claim instance. `holds` is the conjunction of
/// every sub-assertion; informational entries are recorded as passing.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub claim_id: String,
    pub holds: bool,
    pub sub_assertions: Vec<SubAssertion>,
    pub inputs_echo: Value,
}

impl Certificate {
    pub fn new(claim_id: impl Into<String>, inputs: Value) -> Self {
        Certificate { claim_id: claim_id.into(), holds: true, sub_assertions: vec![], inputs_echo: inputs }
    }

    pub fn assert(&mut self, description: impl Into<String>, passed: bool, witness: Value) {
        let description = description.into();
        let witness = if witness.is_null() && !passed { json!({ "failed": description }) } else { witness };
        self.holds &= passed;
        self.sub_assertions.push(SubAssertion { description, passed, witness });
    }

    /// Informational entry.
    pub fn record(&mut self, description: impl Into<String>, witness: Value) {
        self.assert(description, true, witness);
    }

    /// Exact polynomial equality; on failure the witness holds both sides
    /// and their difference.
    pub fn assert_eq_poly(&mut self, description: impl Into<String>, lhs: &UniPoly, rhs: &UniPoly) {
        let passed = lhs == rhs;
        let witness = if passed {
            json!({ "value": lhs.to_canonical() })
        } else {
            json!({ "lhs": lhs.to_canonical(), "rhs": rhs.to_canonical(), "difference": (lhs - rhs).to_canonical() })
        };
        self.assert(description, passed, witness);
    }

    /// Absorbs another certificate's assertions, prefixed by its claim id.
    pub fn absorb(&mut self, other: Certificate) {
        for s in other.sub_assertions {
            self.assert(format!("{}: {}", other.claim_id, s.description), s.passed, s.witness);
        }
    }

    /// Failing sub-assertions, or a pass marker.
    pub fn witness_summary(&self) -> Value {
        let failed: Vec<&SubAssertion> = self.sub_assertions.iter().filter(|s| !s.passed).collect();
        if failed.is_empty() {
            json!({ "claim": self.claim_id, "holds": true })
        } else {
            json!({ "claim": self.claim_id, "failed": failed })
        }
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("certificate serializes")
    }

    /// Canonical single-line JSON: object keys sorted, rationals in lowest
    /// terms. Byte-stable for equal certificates.
    pub fn to_json_string(&self) -> String {
        self.to_json().to_string()
    }

    /// Hex SHA-256 of [`Self::to_json_string`].
    pub fn digest(&self) -> String {
        let hash = Sha256::digest(self.to_json_string().as_bytes());
        hash.iter().fold(String::with_capacity(64), |mut s, b| {
            let _ = write!(s, "{b:02x}");
            s
        })
    }

    /// Key under which the certificate is stored in a [`Baseline`].
    pub fn baseline_key(&self) -> String {
        format!("{} {}", self.claim_id, self.inputs_echo)
    }

    /// One tab-separated line per sub-assertion.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("claim\tdescription\tpassed\twitness\n");
        for s in &self.sub_assertions {
            let _ = writeln!(out, "{}\t{}\t{}\t{}", self.claim_id, s.description, s.passed, s.witness);
        }
        out
    }

    pub fn to_pretty(&self) -> String {
        let mut out = format!(
            "{} {}  inputs {}\n",
            if self.holds { "PASS" } else { "FAIL" },
            self.claim_id,
            self.inputs_echo
        );
        for s in &self.sub_assertions {
            let _ = writeln!(out, "  [{}] {}", if s.passed { "ok" } else { "FAILED" }, s.description);
            if !s.passed {
                let _ = writeln!(out, "         witness: {}", s.witness);
            }
        }
        out
    }
}

/// Expected certificate digests keyed by claim and inputs, for regression
/// checks of the full certificate content.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Baseline {
    pub digests: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum BaselineDiff {
    Missing(String),
    Changed { key: String, expected: String, actual: String },
}

impl Baseline {
    pub fn from_certificates<'a>(certs: impl IntoIterator<Item = &'a Certificate>) -> Self {
        Baseline { digests: certs.into_iter().map(|c| (c.baseline_key(), c.digest())).collect() }
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(self).expect("baseline serializes");
        std::fs::write(path, text + "\n").map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    }

    pub fn compare<'a>(&self, certs: impl IntoIterator<Item = &'a Certificate>) -> Vec<BaselineDiff> {
        certs
            .into_iter()
            .filter_map(|c| {
                let key = c.baseline_key();
                match self.digests.get(&key) {
                    None => Some(BaselineDiff::Missing(key)),
                    Some(d) if *d != c.digest() => {
                        Some(BaselineDiff::Changed { key, expected: d.clone(), actual: c.digest() })
                    }
                    Some(_) => None,
                }
            })
            .collect()
    }
}
