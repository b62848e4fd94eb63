//! Outcome records for identity checks.

use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        })
    }
}

/// One checked identity. A failing record always carries a witness.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub suite: String,
    pub case: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Wall-clock milliseconds; left unset unless timings were requested,
    /// so that reports stay byte-identical between runs.
    #[serde(default, rename = "elapsed", skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl CheckRecord {
    pub fn pass(suite: impl Into<String>, case: impl Into<String>) -> Self {
        CheckRecord {
            suite: suite.into(),
            case: case.into(),
            status: Status::Pass,
            witness: None,
            elapsed_ms: None,
        }
    }

    pub fn fail(suite: impl Into<String>, case: impl Into<String>, witness: impl Into<String>) -> Self {
        CheckRecord {
            suite: suite.into(),
            case: case.into(),
            status: Status::Fail,
            witness: Some(witness.into()),
            elapsed_ms: None,
        }
    }

    pub fn skip(suite: impl Into<String>, case: impl Into<String>, reason: impl Into<String>) -> Self {
        CheckRecord {
            suite: suite.into(),
            case: case.into(),
            status: Status::Skip,
            witness: Some(reason.into()),
            elapsed_ms: None,
        }
    }

    /// Pass when `witness` is `None`, fail with it otherwise.
    pub fn from_witness(
        suite: impl Into<String>,
        case: impl Into<String>,
        witness: Option<String>,
    ) -> Self {
        match witness {
            None => Self::pass(suite, case),
            Some(w) => Self::fail(suite, case, w),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub records: Vec<CheckRecord>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, record: CheckRecord) {
        self.records.push(record);
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.records.extend(other.records);
    }

    pub fn all_passed(&self) -> bool {
        self.records.iter().all(|r| r.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn find(&self, case: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.case == case)
    }

    pub fn summary(&self) -> Summary {
        let mut s = Summary {
            total: self.records.len(),
            ..Summary::default()
        };
        for r in &self.records {
            match r.status {
                Status::Pass => s.passed += 1,
                Status::Fail => s.failed += 1,
                Status::Skip => s.skipped += 1,
            }
        }
        s
    }

    /// Stamps every record with the elapsed time since `start`.
    pub fn timed(mut self, start: Instant) -> Self {
        let ms = start.elapsed().as_secs_f64() * 1e3;
        for r in &mut self.records {
            r.elapsed_ms = Some(ms);
        }
        self
    }
}

impl FromIterator<CheckRecord> for CheckReport {
    fn from_iter<I: IntoIterator<Item = CheckRecord>>(iter: I) -> Self {
        CheckReport {
            records: iter.into_iter().collect(),
        }
    }
}
