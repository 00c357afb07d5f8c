//! Shared check-report format for verification suites.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// One verification check. `witness` carries an element literal or a
/// short description of the first failing identity.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub check_id: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl Check {
    pub fn pass(id: impl Into<String>) -> Self {
        Check { check_id: id.into(), status: Status::Pass, witness: None, elapsed_ms: None }
    }

    pub fn fail(id: impl Into<String>, witness: impl Into<String>) -> Self {
        Check { check_id: id.into(), status: Status::Fail, witness: Some(witness.into()), elapsed_ms: None }
    }

    pub fn skipped(id: impl Into<String>, why: impl Into<String>) -> Self {
        Check { check_id: id.into(), status: Status::Skipped, witness: Some(why.into()), elapsed_ms: None }
    }
}

/// A deterministic list of checks, ordered by check id.
#[derive(Debug, Clone, Default, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report { checks: Vec::new() }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    /// Sorts by check id; ids are chosen so lexicographic order is the
    /// logical order.
    pub fn finalize(mut self) -> Self {
        self.checks.sort_by(|a, b| a.check_id.cmp(&b.check_id));
        self
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn summary(&self) -> String {
        let pass = self.checks.iter().filter(|c| c.status == Status::Pass).count();
        let fail = self.checks.iter().filter(|c| c.status == Status::Fail).count();
        let skip = self.checks.iter().filter(|c| c.status == Status::Skipped).count();
        format!("{pass} passed, {fail} failed, {skip} skipped")
    }
}
