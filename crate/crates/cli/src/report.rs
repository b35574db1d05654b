//! Verification reports. The emitted JSON is canonical: keys are sorted,
//! records keep suite order, and big integers are decimal strings, so two runs
//! of the same suite produce identical bytes. Wall time is kept on the report
//! but never serialized.

use serde_json::{json, Value};
use std::fmt;
use std::time::Duration;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
        }
    }
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckRecord {
    pub id: String,
    pub n_lo: usize,
    pub n_hi: usize,
    pub status: CheckStatus,
    pub detail: Value,
    /// Present exactly when the check failed.
    pub witness: Option<Value>,
}

impl CheckRecord {
    /// A passing record when `witness` is `None`, a failing one otherwise.
    pub fn new(id: &str, n_lo: usize, n_hi: usize, detail: Value, witness: Option<Value>) -> Self {
        let status = if witness.is_some() {
            CheckStatus::Fail
        } else {
            CheckStatus::Pass
        };
        CheckRecord {
            id: id.to_string(),
            n_lo,
            n_hi,
            status,
            detail,
            witness,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "id": self.id,
            "n_range": [self.n_lo, self.n_hi],
            "status": self.status.as_str(),
            "detail": self.detail,
        });
        if let Some(w) = &self.witness {
            v["witness"] = w.clone();
        }
        v
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: String,
    pub max_n: usize,
    pub records: Vec<CheckRecord>,
    pub wall_time: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.records.iter().all(CheckRecord::passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.passed())
    }

    pub fn record(&self, id: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.id == id)
    }

    pub fn to_json(&self) -> Value {
        let passed = self.records.iter().filter(|r| r.passed()).count();
        json!({
            "suite": self.suite,
            "max_n": self.max_n,
            "status": if self.passed() { "pass" } else { "fail" },
            "totals": {
                "checks": self.records.len(),
                "passed": passed,
                "failed": self.records.len() - passed,
            },
            "checks": self.records.iter().map(CheckRecord::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("report is valid JSON");
        s.push('\n');
        s
    }

    /// One row per check: `check,n_lo,n_hi,status`.
    pub fn render_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record(["check", "n_lo", "n_hi", "status"])
            .expect("in-memory write");
        for r in &self.records {
            w.write_record([
                r.id.clone(),
                r.n_lo.to_string(),
                r.n_hi.to_string(),
                r.status.to_string(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii")
    }
}
