//! Check outcomes and verification reports.

use serde::Serialize;
use std::fmt;
use std::time::Instant;

/// First failing instance of an identity: what was compared, where, and the
/// two sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub identity: String,
    pub indices: String,
    pub lhs: String,
    pub rhs: String,
}

impl Witness {
    pub fn new(
        identity: impl Into<String>,
        indices: impl Into<String>,
        lhs: impl fmt::Display,
        rhs: impl fmt::Display,
    ) -> Self {
        Witness {
            identity: identity.into(),
            indices: indices.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at {}: {} != {}",
            self.identity, self.indices, self.lhs, self.rhs
        )
    }
}

pub type CheckResult = std::result::Result<(), Witness>;

/// Fails with the given witness unless `lhs == rhs`.
pub fn expect_eq<T: PartialEq + fmt::Display>(
    identity: &str,
    indices: impl FnOnce() -> String,
    lhs: &T,
    rhs: &T,
) -> CheckResult {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Witness::new(identity, indices(), lhs, rhs))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
    /// The check does not apply to this input.
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub subject: String,
    pub checks: Vec<CheckRecord>,
    pub verdict: bool,
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        VerificationReport {
            subject: subject.into(),
            checks: Vec::new(),
            verdict: true,
        }
    }

    /// Runs one check and records it. An `Err` from `f` means the check was
    /// inapplicable to the input; it counts as a failure.
    pub fn run(&mut self, name: &str, f: impl FnOnce() -> crate::Result<CheckResult>) {
        let start = Instant::now();
        let outcome = f();
        let elapsed_ms = start.elapsed().as_millis() as u64;
        let (status, witness, detail) = match outcome {
            Ok(Ok(())) => (Status::Pass, None, None),
            Ok(Err(w)) => (Status::Fail, Some(w), None),
            Err(e) => (Status::Error, None, Some(e.to_string())),
        };
        self.push(CheckRecord {
            name: name.to_string(),
            status,
            witness,
            detail,
            elapsed_ms,
        });
    }

    pub fn skip(&mut self, name: &str, reason: impl Into<String>) {
        self.push(CheckRecord {
            name: name.to_string(),
            status: Status::Skipped,
            witness: None,
            detail: Some(reason.into()),
            elapsed_ms: 0,
        });
    }

    pub fn push(&mut self, record: CheckRecord) {
        self.verdict &= matches!(record.status, Status::Pass | Status::Skipped);
        self.checks.push(record);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_is_conjunction() {
        let mut r = VerificationReport::new("x");
        r.run("a", || Ok(Ok(())));
        assert!(r.verdict);
        r.run("b", || Ok(Err(Witness::new("id", "i=1", 1, 2))));
        assert!(!r.verdict);
        assert_eq!(r.checks[1].status, Status::Fail);
        assert_eq!(
            r.checks[1].witness.as_ref().unwrap().to_string(),
            "id at i=1: 1 != 2"
        );
    }

    #[test]
    fn errors_fail_the_suite() {
        let mut r = VerificationReport::new("x");
        r.run("c", || Err(crate::Error::Disconnected { i: 1, j: 2 }));
        assert!(!r.verdict);
        assert_eq!(r.checks[0].status, Status::Error);
    }

    #[test]
    fn skipped_checks_do_not_fail() {
        let mut r = VerificationReport::new("x");
        r.skip("kwrep", "boundary is disconnected");
        assert!(r.verdict);
    }
}
