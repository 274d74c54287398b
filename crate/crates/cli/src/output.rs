//! Serializable shapes for every command, and their text and CSV renderings.

use std::fmt::Write as _;

use idxsum_verify::report::{json_int, json_int_opt};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    Sum,
    Product,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Agreement {
    Agree,
    Mismatch,
    /// Only one side was computed.
    Unchecked,
    Empty,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictionRow {
    pub theorem: String,
    #[serde(with = "json_int")]
    pub asserted_modulus: u64,
    #[serde(with = "json_int")]
    pub predicted: u64,
    /// The oracle value reduced modulo `asserted_modulus`.
    #[serde(with = "json_int_opt", default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<u64>,
}

impl PredictionRow {
    pub fn agrees(&self) -> Option<bool> {
        self.oracle.map(|o| o == self.predicted)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub quantity: Quantity,
    #[serde(with = "json_int")]
    pub modulus: u64,
    #[serde(with = "json_int")]
    pub delta: u64,
    #[serde(with = "json_int")]
    pub lambda: u64,
    #[serde(with = "json_int")]
    pub count: u64,
    /// The sum or product modulo `modulus`.
    #[serde(with = "json_int_opt", default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<u64>>,
    pub predictions: Vec<PredictionRow>,
    pub status: Agreement,
}

impl ClassReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let what = match self.quantity {
            Quantity::Sum => "sum",
            Quantity::Product => "product",
        };
        if self.status == Agreement::Empty {
            let _ = writeln!(
                out,
                "empty class: no unit modulo {} has order {} (lambda({}) = {})",
                self.modulus, self.delta, self.modulus, self.lambda
            );
            return out;
        }
        let _ = writeln!(
            out,
            "modulus {}, delta {}: {} unit{} (lambda = {})",
            self.modulus,
            self.delta,
            self.count,
            if self.count == 1 { "" } else { "s" },
            self.lambda
        );
        if let Some(v) = self.oracle {
            let _ = writeln!(out, "oracle {what}: {v} (mod {})", self.modulus);
        }
        if let Some(elements) = &self.elements {
            let list: Vec<String> = elements.iter().map(u64::to_string).collect();
            let _ = writeln!(out, "elements: {}", list.join(" "));
        }
        if !self.predictions.is_empty() {
            let width = self.predictions.iter().map(|p| p.theorem.len()).max().unwrap_or(0).max(7);
            let _ = writeln!(
                out,
                "{:<width$}  {:>10}  {:>10}  {:>10}  status",
                "theorem", "modulus", "predicted", "oracle"
            );
            for p in &self.predictions {
                let (oracle, status) = match p.agrees() {
                    Some(true) => (p.oracle.unwrap().to_string(), "AGREE"),
                    Some(false) => (p.oracle.unwrap().to_string(), "MISMATCH"),
                    None => ("-".to_owned(), "-"),
                };
                let _ = writeln!(
                    out,
                    "{:<width$}  {:>10}  {:>10}  {:>10}  {status}",
                    p.theorem, p.asserted_modulus, p.predicted, oracle
                );
            }
        }
        let _ = writeln!(out, "{}", status_word(self.status));
        out
    }

    /// Same columns as the verifier's CSV report.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("theorem_id,m,delta,asserted_modulus,expected,actual,status\n");
        for p in &self.predictions {
            let status = match p.agrees() {
                Some(true) => "AGREE",
                Some(false) => "MISMATCH",
                None => "UNCHECKED",
            };
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{status}",
                p.theorem,
                self.modulus,
                self.delta,
                p.asserted_modulus,
                p.predicted,
                p.oracle.map(|o| o.to_string()).unwrap_or_default()
            );
        }
        out
    }
}

fn status_word(a: Agreement) -> &'static str {
    match a {
        Agreement::Agree => "AGREE",
        Agreement::Mismatch => "MISMATCH",
        Agreement::Unchecked => "UNCHECKED",
        Agreement::Empty => "EMPTY",
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRow {
    #[serde(with = "json_int")]
    pub delta: u64,
    #[serde(with = "json_int")]
    pub count: u64,
    /// The count predicted without enumeration.
    #[serde(with = "json_int")]
    pub closed_count: u64,
    #[serde(with = "json_int")]
    pub sum: u64,
    #[serde(with = "json_int")]
    pub product: u64,
    /// Number of closed forms checked for this row.
    pub closed_forms: usize,
    pub status: Agreement,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    #[serde(with = "json_int")]
    pub total: u64,
    #[serde(with = "json_int")]
    pub phi: u64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassesReport {
    #[serde(with = "json_int")]
    pub modulus: u64,
    #[serde(with = "json_int")]
    pub phi: u64,
    #[serde(with = "json_int")]
    pub lambda: u64,
    pub rows: Vec<ClassRow>,
    pub partition: Partition,
    pub status: Agreement,
}

impl ClassesReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "modulus {}: phi = {}, lambda = {}", self.modulus, self.phi, self.lambda);
        let _ = writeln!(
            out,
            "{:>10}  {:>10}  {:>10}  {:>10}  closed forms",
            "delta", "count", "sum", "product"
        );
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{:>10}  {:>10}  {:>10}  {:>10}  {} ({} checked)",
                r.delta,
                r.count,
                r.sum,
                r.product,
                status_word(r.status),
                r.closed_forms + 1
            );
        }
        let _ = writeln!(
            out,
            "{:>10}  {:>10}  {:>10}  {:>10}  {}",
            "total",
            self.partition.total,
            "",
            "",
            if self.partition.holds {
                format!("= phi({})", self.modulus)
            } else {
                format!("!= phi({}) = {}", self.modulus, self.phi)
            }
        );
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("delta,count,closed_count,sum,product,status\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                r.delta,
                r.count,
                r.closed_count,
                r.sum,
                r.product,
                status_word(r.status)
            );
        }
        out
    }
}

/// The value of a named function or of a convolution at one point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueReport {
    pub expression: String,
    #[serde(with = "json_int")]
    pub n: u64,
    /// An exact rational, `p` or `p/q`.
    pub value: String,
}

impl ValueReport {
    pub fn to_text(&self) -> String {
        format!("{}({}) = {}\n", self.expression, self.n, self.value)
    }

    pub fn to_csv(&self) -> String {
        format!("expression,n,value\n\"{}\",{},{}\n", self.expression, self.n, self.value)
    }
}
