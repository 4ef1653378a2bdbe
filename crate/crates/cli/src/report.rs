use std::fmt;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A printed claim that was checked, found false, and independently
    /// contradicted by the attached witness.
    Refuted,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Refuted => "REFUTED",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub expected: Value,
    pub actual: Value,
    pub witness: Value,
}

impl Check {
    /// Passes iff `expected` and `actual` serialize identically.
    pub fn compare(id: &str, anchor: &str, expected: impl Serialize, actual: impl Serialize) -> Check {
        let expected = to_value(expected);
        let actual = to_value(actual);
        let status = if expected == actual { Status::Pass } else { Status::Fail };
        Check { id: id.into(), anchor: anchor.into(), status, expected, actual, witness: Value::Null }
    }

    pub fn truth(id: &str, anchor: &str, ok: bool) -> Check {
        Check::compare(id, anchor, true, ok)
    }

    /// A step that could not produce a value at all.
    pub fn error(id: &str, anchor: &str, err: impl fmt::Display) -> Check {
        Check {
            id: id.into(),
            anchor: anchor.into(),
            status: Status::Fail,
            expected: Value::Null,
            actual: Value::Null,
            witness: Value::String(err.to_string()),
        }
    }

    pub fn with_witness(mut self, w: impl Serialize) -> Check {
        self.witness = to_value(w);
        self
    }

    /// Turns a failure into a refutation when `independent` confirms it.
    pub fn refuted_if(mut self, independent: bool) -> Check {
        if self.status == Status::Fail && independent {
            self.status = Status::Refuted;
        }
        self
    }
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).unwrap_or_else(|e| Value::String(format!("unserializable: {e}")))
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub version: String,
    pub status: Status,
    pub checks: Vec<Check>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(suite: &str, checks: Vec<Check>, elapsed_ms: u64) -> Report {
        let status = overall(&checks);
        Report { suite: suite.into(), version: env!("CARGO_PKG_VERSION").into(), status, checks, elapsed_ms }
    }

    pub fn failed(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail).collect()
    }
}

pub fn overall(checks: &[Check]) -> Status {
    if checks.iter().any(|c| c.status == Status::Fail) {
        Status::Fail
    } else if checks.iter().any(|c| c.status == Status::Refuted) {
        Status::Refuted
    } else {
        Status::Pass
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statuses() {
        assert_eq!(Check::compare("a", "x", 1, 1).status, Status::Pass);
        assert_eq!(Check::compare("a", "x", 1, 2).status, Status::Fail);
        assert_eq!(Check::compare("a", "x", 1, 2).refuted_if(true).status, Status::Refuted);
        assert_eq!(Check::compare("a", "x", 1, 1).refuted_if(true).status, Status::Pass);
        let cs = vec![Check::truth("a", "x", true), Check::truth("b", "x", false).refuted_if(true)];
        assert_eq!(overall(&cs), Status::Refuted);
        assert_eq!(overall(&[Check::error("c", "x", "boom")]), Status::Fail);
    }
}
