//! Pass/fail records shared by the verification suites.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Not a failure, but worth a look (e.g. a clamped multiplicity).
    Flagged,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Flagged => "flagged",
        })
    }
}

/// One named check on one subject.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub subject: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, subject: impl Into<String>, passed: bool) -> Self {
        Check {
            name: name.into(),
            subject: subject.into(),
            status: if passed { Status::Pass } else { Status::Fail },
            note: None,
        }
    }

    pub fn flagged(name: impl Into<String>, subject: impl Into<String>, note: impl Into<String>) -> Self {
        Check { name: name.into(), subject: subject.into(), status: Status::Flagged, note: Some(note.into()) }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {} {}", self.status, self.name, self.subject)?;
        if let Some(note) = &self.note {
            write!(f, " ({note})")?;
        }
        Ok(())
    }
}

/// True when no check failed; flagged checks do not count as failures.
pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(Check::passed)
}
