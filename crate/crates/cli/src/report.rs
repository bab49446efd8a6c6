//! The JSON verification report.

use std::time::Instant;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Exact computation contradicts a stated value; see `discrepancies`.
    Flagged,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
    pub wall_time_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub location: String,
    pub paper_says: String,
    pub oracle_says: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub tool_version: String,
    pub target: String,
    pub n: usize,
    /// Statistic the target is about, or `null` for mixed targets.
    pub kind: Option<String>,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub discrepancies: Vec<Discrepancy>,
}

impl VerificationReport {
    pub fn new(target: &str, n: usize, kind: Option<&str>, seed: u64) -> Self {
        VerificationReport {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            target: target.to_string(),
            n,
            kind: kind.map(str::to_string),
            seed,
            checks: Vec::new(),
            discrepancies: Vec::new(),
        }
    }

    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn exit_code(&self) -> i32 {
        if self.failed() {
            1
        } else {
            0
        }
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Collects checks, stamping each with its wall time unless timing is off.
pub struct Recorder {
    pub report: VerificationReport,
    timing: bool,
}

impl Recorder {
    pub fn new(report: VerificationReport, timing: bool) -> Self {
        Recorder { report, timing }
    }

    pub fn start(&self) -> Instant {
        Instant::now()
    }

    pub fn push(&mut self, started: Instant, id: impl Into<String>, status: Status, witness: Option<String>, detail: Option<String>) {
        let wall_time_ms = if self.timing { started.elapsed().as_millis() as u64 } else { 0 };
        self.report.checks.push(Check { id: id.into(), status, witness, detail, wall_time_ms });
    }

    pub fn pass_if(&mut self, started: Instant, id: impl Into<String>, ok: bool, witness: Option<String>, detail: Option<String>) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.push(started, id, status, witness, detail);
    }

    pub fn discrepancy(&mut self, location: impl Into<String>, paper_says: impl Into<String>, oracle_says: impl Into<String>) {
        self.report.discrepancies.push(Discrepancy {
            location: location.into(),
            paper_says: paper_says.into(),
            oracle_says: oracle_says.into(),
        });
    }

    pub fn finish(self) -> VerificationReport {
        self.report
    }
}
