//! Uniform result records for the identity checks.

use serde::Serialize;
use serde_json::Value;

use crate::statistics::Mode;

/// How a check was decided.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Method {
    /// Exact symbolic comparison.
    Symbolic,
    /// Exact comparison at seeded rational points.
    Points { seed: u64, count: usize },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<Mode>,
    pub method: Method,
    /// Number of individual comparisons performed.
    pub cases: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<Value>,
}

impl CheckReport {
    pub fn new(check: &str, n: usize, mode: Option<Mode>, method: Method) -> Self {
        Self { check: check.into(), n, mode, method, cases: 0, passed: true, counterexample: None, data: None }
    }

    /// Records one comparison; the first failure is kept.
    pub fn record(&mut self, ok: bool, counterexample: impl FnOnce() -> Value) {
        self.cases += 1;
        if !ok && self.passed {
            self.passed = false;
            self.counterexample = Some(counterexample());
        }
    }

    pub fn with_data(mut self, data: Value) -> Self {
        self.data = Some(data);
        self
    }

    /// Folds per-task results into one report.
    pub fn merge(mut self, other: CheckReport) -> Self {
        self.cases += other.cases;
        if self.passed && !other.passed {
            self.passed = false;
            self.counterexample = other.counterexample;
        }
        self
    }
}
