//! Verification reports.

use std::fmt;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::Result;

/// Outcome of a single check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

/// One named check with a short label of the statement it exercises.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub anchor: String,
    pub status: Status,
    /// Nonzero normal form (or other evidence) on failure.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

/// Schema version of the JSON rendering.
pub const REPORT_SCHEMA: u32 = 1;

/// A suite of checks.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub suite: String,
    pub checks: Vec<Check>,
    /// Wall-clock seconds.
    pub duration: f64,
    #[serde(skip)]
    started: Option<Instant>,
}

impl Report {
    pub fn new(suite: &str) -> Report {
        Report { schema: REPORT_SCHEMA, suite: suite.to_string(), checks: vec![], duration: 0.0, started: Some(Instant::now()) }
    }

    /// Record a check that passes iff `witness` is `None`.
    pub fn record(&mut self, name: impl Into<String>, anchor: &str, witness: Option<String>) {
        let status = if witness.is_none() { Status::Pass } else { Status::Fail };
        self.checks.push(Check { name: name.into(), anchor: anchor.to_string(), status, witness });
    }

    /// Record a boolean check with a witness produced on failure.
    pub fn assert(&mut self, name: impl Into<String>, anchor: &str, ok: bool, witness: impl FnOnce() -> String) {
        let w = if ok { None } else { Some(witness()) };
        self.record(name, anchor, w);
    }

    /// Record the result of a fallible computation; errors count as failures.
    pub fn attempt(&mut self, name: impl Into<String>, anchor: &str, f: impl FnOnce() -> Result<Option<String>>) {
        let w = match f() {
            Ok(w) => w,
            Err(e) => Some(format!("error: {e}")),
        };
        self.record(name, anchor, w);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    /// Stop the clock.
    pub fn finish(mut self) -> Report {
        if let Some(t) = self.started.take() {
            self.duration = t.elapsed().as_secs_f64();
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn elapsed(&self) -> Duration {
        Duration::from_secs_f64(self.duration)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} ({:.2}s)", self.suite, self.duration)?;
        for c in &self.checks {
            write!(f, "  {} {} [{}]", c.status, c.name, c.anchor)?;
            if let Some(w) = &c.witness {
                write!(f, "\n      witness: {w}")?;
            }
            writeln!(f)?;
        }
        let failed = self.failures().count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}
