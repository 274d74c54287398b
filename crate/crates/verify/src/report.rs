use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

/// Integers above this bound are written as decimal strings in JSON.
pub const MAX_SAFE_INTEGER: u64 = (1 << 53) - 1;

/// Serde adapter: plain JSON numbers up to 2^53 − 1, decimal strings above.
pub mod json_int {
    use serde::{de, Deserialize, Deserializer, Serializer};

    use super::MAX_SAFE_INTEGER;

    pub fn serialize<S: Serializer>(v: &u64, s: S) -> Result<S::Ok, S::Error> {
        if *v > MAX_SAFE_INTEGER {
            s.serialize_str(&v.to_string())
        } else {
            s.serialize_u64(*v)
        }
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Num(u64),
        Str(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<u64, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Num(n) => Ok(n),
            Repr::Str(s) => s.parse().map_err(de::Error::custom),
        }
    }
}

/// [`json_int`] for optional integers; `None` is `null`.
pub mod json_int_opt {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<u64>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => super::json_int::serialize(v, s),
            None => s.serialize_none(),
        }
    }

    #[derive(Deserialize)]
    struct Wrap(#[serde(with = "super::json_int")] u64);

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<u64>, D::Error> {
        Ok(Option::<Wrap>::deserialize(d)?.map(|w| w.0))
    }
}

/// A closed form that disagreed with the oracle.
///
/// For identities between rational-valued functions `expected`/`actual` are
/// 1/0 truth values and `note` carries the two sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    #[serde(with = "json_int")]
    pub m: u64,
    #[serde(with = "json_int")]
    pub delta: u64,
    #[serde(with = "json_int")]
    pub asserted_modulus: u64,
    #[serde(with = "json_int")]
    pub expected: u64,
    #[serde(with = "json_int")]
    pub actual: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// A skipped case worth reporting: the closed form was evaluated outside its
/// stated scope and disagrees with the oracle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScopeNote {
    #[serde(with = "json_int")]
    pub m: u64,
    #[serde(with = "json_int")]
    pub delta: u64,
    #[serde(with = "json_int")]
    pub asserted_modulus: u64,
    #[serde(with = "json_int")]
    pub formula: u64,
    #[serde(with = "json_int")]
    pub oracle: u64,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem_id: String,
    #[serde(with = "json_int")]
    pub cases: u64,
    #[serde(with = "json_int")]
    pub skips: u64,
    pub skip_reasons: BTreeMap<String, u64>,
    pub mismatches: Vec<Mismatch>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub scope_notes: Vec<ScopeNote>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaskConfig {
    pub theorem_id: String,
    pub range: [u64; 2],
    #[serde(with = "json_int")]
    pub seed: u64,
    pub include_elements: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportConfig {
    pub tasks: Vec<TaskConfig>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub version: String,
    pub config: ReportConfig,
    pub per_theorem: Vec<TheoremReport>,
    pub status: Status,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn theorem(&self, id: &str) -> Option<&TheoremReport> {
        self.per_theorem.iter().find(|t| t.theorem_id == id)
    }

    pub fn total_cases(&self) -> u64 {
        self.per_theorem.iter().map(|t| t.cases).sum()
    }

    pub fn total_mismatches(&self) -> usize {
        self.per_theorem.iter().map(|t| t.mismatches.len()).sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The report with timing zeroed, for run-to-run comparison.
    pub fn without_timing(&self) -> Self {
        Self {
            elapsed_ms: 0,
            ..self.clone()
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let width = self
            .per_theorem
            .iter()
            .map(|t| t.theorem_id.len())
            .max()
            .unwrap_or(0)
            .max(7);
        let _ = writeln!(
            out,
            "{:<width$}  {:>10}  {:>8}  {:>10}  status",
            "theorem", "cases", "skips", "mismatches"
        );
        for t in &self.per_theorem {
            let _ = writeln!(
                out,
                "{:<width$}  {:>10}  {:>8}  {:>10}  {}",
                t.theorem_id,
                t.cases,
                t.skips,
                t.mismatches.len(),
                if t.passed() { "PASS" } else { "FAIL" }
            );
            for (reason, n) in &t.skip_reasons {
                let _ = writeln!(out, "{:<width$}    skipped {n}: {reason}", "");
            }
            for mm in t.mismatches.iter().take(10) {
                let _ = writeln!(
                    out,
                    "{:<width$}    mismatch m={} delta={} mod {}: expected {} actual {}{}",
                    "",
                    mm.m,
                    mm.delta,
                    mm.asserted_modulus,
                    mm.expected,
                    mm.actual,
                    mm.note.as_deref().map(|n| format!(" ({n})")).unwrap_or_default()
                );
            }
            if t.mismatches.len() > 10 {
                let _ = writeln!(out, "{:<width$}    ... {} more", "", t.mismatches.len() - 10);
            }
        }
        let _ = writeln!(
            out,
            "{}: {} cases, {} mismatches, {} ms",
            if self.passed() { "PASS" } else { "FAIL" },
            self.total_cases(),
            self.total_mismatches(),
            self.elapsed_ms
        );
        out
    }

    /// One row per mismatch and per scope note.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("theorem_id,m,delta,asserted_modulus,expected,actual,status\n");
        for t in &self.per_theorem {
            for mm in &t.mismatches {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},MISMATCH",
                    t.theorem_id, mm.m, mm.delta, mm.asserted_modulus, mm.expected, mm.actual
                );
            }
            for n in &t.scope_notes {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},SKIP",
                    t.theorem_id, n.m, n.delta, n.asserted_modulus, n.formula, n.oracle
                );
            }
        }
        out
    }
}
