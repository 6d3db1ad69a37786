use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub identity: String,
    pub indices: BTreeMap<String, i64>,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self
            .indices
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        write!(
            f,
            "{} at [{}]: expected {}, got {}",
            self.identity,
            idx.join(", "),
            self.expected,
            self.actual
        )
    }
}

/// Outcome of one identity suite. `status` is `Fail` exactly when
/// `first_failure` is present.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub suite: String,
    pub nmax: usize,
    pub status: Status,
    pub checks_run: u64,
    pub failures: u64,
    pub first_failure: Option<Failure>,
    /// Informational measurements and known discrepancies; never affect
    /// `status`.
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
        };
        write!(
            f,
            "{:<7} nmax={} {} checks={} failures={}",
            self.suite, self.nmax, status, self.checks_run, self.failures
        )?;
        if let Some(ff) = &self.first_failure {
            write!(f, "\n  first failure: {ff}")?;
        }
        for n in &self.notes {
            write!(f, "\n  note: {n}")?;
        }
        Ok(())
    }
}

/// Accumulates checks for a suite. All checks run; the first failure is kept.
pub(crate) struct Checker {
    report: CheckReport,
}

pub(crate) type Idx<'a> = &'a [(&'a str, i64)];

fn index_map(idx: Idx) -> BTreeMap<String, i64> {
    idx.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

impl Checker {
    pub fn new(suite: &str, nmax: usize) -> Self {
        Checker {
            report: CheckReport {
                suite: suite.to_string(),
                nmax,
                status: Status::Pass,
                checks_run: 0,
                failures: 0,
                first_failure: None,
                notes: Vec::new(),
            },
        }
    }

    pub fn eq(&mut self, identity: &str, idx: Idx, expected: &BigInt, actual: &BigInt) -> bool {
        self.outcome(identity, idx, expected == actual, || {
            (expected.to_string(), actual.to_string())
        })
    }

    pub fn outcome(
        &mut self,
        identity: &str,
        idx: Idx,
        ok: bool,
        detail: impl FnOnce() -> (String, String),
    ) -> bool {
        self.report.checks_run += 1;
        if !ok {
            self.report.failures += 1;
            if self.report.first_failure.is_none() {
                let (expected, actual) = detail();
                self.report.first_failure = Some(Failure {
                    identity: identity.to_string(),
                    indices: index_map(idx),
                    expected,
                    actual,
                });
                self.report.status = Status::Fail;
            }
        }
        ok
    }

    pub fn fail(&mut self, identity: &str, idx: Idx, expected: String, actual: String) {
        self.outcome(identity, idx, false, || (expected, actual));
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.report.notes.push(text.into());
    }

    pub fn finish(self) -> CheckReport {
        self.report
    }
}

/// Tallies an identity outside the range where it is claimed, for notes.
pub(crate) struct Measure {
    name: String,
    holds: u64,
    fails: u64,
    first: Option<String>,
}

impl Measure {
    pub fn new(name: impl Into<String>) -> Self {
        Measure {
            name: name.into(),
            holds: 0,
            fails: 0,
            first: None,
        }
    }

    pub fn record(&mut self, idx: Idx, expected: &BigInt, actual: &BigInt) {
        if expected == actual {
            self.holds += 1;
        } else {
            self.fails += 1;
            if self.first.is_none() {
                let i: Vec<String> = idx.iter().map(|(k, v)| format!("{k}={v}")).collect();
                self.first = Some(format!(
                    "[{}] expected {expected}, got {actual}",
                    i.join(", ")
                ));
            }
        }
    }

    pub fn into_note(self) -> String {
        match self.first {
            None => format!(
                "informational: {} holds at all {} cells measured",
                self.name, self.holds
            ),
            Some(first) => format!(
                "informational: {} fails at {} of {} cells measured; first {first}",
                self.name,
                self.fails,
                self.holds + self.fails
            ),
        }
    }
}
