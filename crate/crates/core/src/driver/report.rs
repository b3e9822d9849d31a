use std::time::Duration;

use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "skipped-margin-limited")]
    SkippedMarginLimited,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub suite: String,
    pub check: String,
    pub status: Status,
    pub payload: String,
    /// Not serialized, so reports stay byte-identical across runs.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl CheckResult {
    pub fn new(suite: &str, check: impl Into<String>, passed: bool, payload: impl Into<String>) -> Self {
        let mut payload = payload.into();
        if !passed && payload.is_empty() {
            payload = "failed".into();
        }
        Self {
            suite: suite.into(),
            check: check.into(),
            status: if passed { Status::Pass } else { Status::Fail },
            payload,
            wall_time: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub suite: String,
    pub summary: Summary,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn new(suite: &str, mut checks: Vec<CheckResult>) -> Self {
        checks.sort_by(|a, b| (&a.suite, &a.check).cmp(&(&b.suite, &b.check)));
        let mut summary = Summary {
            total: checks.len(),
            ..Summary::default()
        };
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::SkippedMarginLimited => summary.skipped += 1,
            }
        }
        Self {
            schema_version: SCHEMA_VERSION,
            suite: suite.into(),
            summary,
            checks,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.pass == self.summary.total
    }

    /// 0 when every check passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed())
    }
}
