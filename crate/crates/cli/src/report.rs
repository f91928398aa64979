//! Check results and the machine-readable verification report.

use std::fmt;
use std::io::Write;
use std::time::{Duration, Instant};

use serde::{Serialize, Serializer};

pub const REPORT_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped(String),
}

impl Status {
    pub fn is_fail(&self) -> bool {
        matches!(self, Status::Fail)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => f.write_str("pass"),
            Status::Fail => f.write_str("fail"),
            Status::Skipped(reason) => write!(f, "skipped({reason})"),
        }
    }
}

impl Serialize for Status {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub subject: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    pub elapsed_ms: u64,
}

impl CheckResult {
    /// Pass when `expected == actual`, fail otherwise.
    pub fn compare(id: &str, subject: &str, expected: impl ToString, actual: impl ToString) -> CheckResult {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let status = if expected == actual { Status::Pass } else { Status::Fail };
        CheckResult { id: id.to_owned(), subject: subject.to_owned(), status, expected, actual, elapsed_ms: 0 }
    }

    /// Pass or fail as decided by the caller, for checks of inequalities.
    pub fn verdict(id: &str, subject: &str, ok: bool, expected: impl ToString, actual: impl ToString) -> CheckResult {
        CheckResult {
            id: id.to_owned(),
            subject: subject.to_owned(),
            status: if ok { Status::Pass } else { Status::Fail },
            expected: expected.to_string(),
            actual: actual.to_string(),
            elapsed_ms: 0,
        }
    }

    pub fn skipped(id: &str, subject: &str, reason: impl Into<String>) -> CheckResult {
        CheckResult {
            id: id.to_owned(),
            subject: subject.to_owned(),
            status: Status::Skipped(reason.into()),
            expected: String::new(),
            actual: String::new(),
            elapsed_ms: 0,
        }
    }

    pub fn with_elapsed(mut self, elapsed: Duration) -> CheckResult {
        self.elapsed_ms = u64::try_from(elapsed.as_millis()).unwrap_or(u64::MAX);
        self
    }
}

/// Runs `f` and stamps its wall-clock time on the result.
pub fn timed(f: impl FnOnce() -> CheckResult) -> CheckResult {
    let start = Instant::now();
    let r = f();
    r.with_elapsed(start.elapsed())
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub version: String,
    pub corpus_sha256: String,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    /// Sorts results by `(id, subject)` and tallies them.
    pub fn new(corpus_sha256: String, mut checks: Vec<CheckResult>) -> Report {
        checks.sort_by(|a, b| (&a.id, &a.subject).cmp(&(&b.id, &b.subject)));
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skipped(_) => summary.skipped += 1,
            }
        }
        Report { version: REPORT_VERSION.to_owned(), corpus_sha256, checks, summary }
    }

    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn write_csv<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        for c in &self.checks {
            w.serialize(c)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn write_text<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped(_) => "SKIP",
            };
            write!(out, "{tag} {} {}", c.id, c.subject)?;
            match &c.status {
                Status::Skipped(reason) => writeln!(out, " ({reason})")?,
                _ => writeln!(out, ": expected [{}] actual [{}]", c.expected, c.actual)?,
            }
        }
        writeln!(
            out,
            "summary: {} pass, {} fail, {} skipped (corpus sha256 {})",
            self.summary.pass, self.summary.fail, self.summary.skipped, self.corpus_sha256
        )
    }
}
