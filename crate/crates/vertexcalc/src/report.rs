//! Suite reports and their deterministic merge.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Wording attached to a failed check that would contradict the vertex theorem.
pub const THEOREM_CONTRADICTION: &str = "contradicts Theorem VerticesHecke; implementation fault suspected";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    /// A finding worth reporting that does not fail the suite.
    Flagged,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
            Status::Flagged => "flagged",
        })
    }
}

/// What kind of failure a check represents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailureKind {
    /// The outcome would contradict a proved theorem.
    TheoremContradiction,
    /// An identity the implementation relies on did not hold.
    Consistency,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub description: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<FailureKind>,
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub witness: Value,
}

impl Check {
    pub fn new(description: impl Into<String>, status: Status) -> Self {
        Check { description: description.into(), status, kind: None, witness: Value::Null }
    }

    /// A pass/fail check; failures are consistency failures.
    pub fn verdict(description: impl Into<String>, ok: bool) -> Self {
        let mut c = Check::new(description, Status::from_bool(ok));
        if !ok {
            c.kind = Some(FailureKind::Consistency);
        }
        c
    }

    /// A pass/fail check whose failure would contradict the vertex theorem.
    pub fn theorem(description: impl Into<String>, ok: bool) -> Self {
        let mut c = Check::new(description, Status::from_bool(ok));
        if !ok {
            c.kind = Some(FailureKind::TheoremContradiction);
            c.description = format!("{}: {THEOREM_CONTRADICTION}", c.description);
        }
        c
    }

    pub fn with_witness(mut self, witness: Value) -> Self {
        self.witness = witness;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub parameters: BTreeMap<String, Value>,
    pub status: Status,
    pub records: Vec<Check>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, parameters: BTreeMap<String, Value>) -> Self {
        SuiteReport { suite: suite.into(), parameters, status: Status::Pass, records: Vec::new() }
    }

    pub fn push(&mut self, check: Check) {
        self.records.push(check);
        self.status = overall(&self.records);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.records.extend(checks);
        self.status = overall(&self.records);
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.records.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.records.iter().filter(|c| c.status == status).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// `fail` iff some record fails.
pub fn overall(records: &[Check]) -> Status {
    if records.iter().any(|c| c.status == Status::Fail) {
        Status::Fail
    } else {
        Status::Pass
    }
}

/// A report with its wall-clock duration, kept outside the deterministic body.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Envelope {
    pub report: SuiteReport,
    pub duration_seconds: f64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Aggregate {
    pub status: Status,
    pub reports: Vec<SuiteReport>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Collision {
    pub suite: String,
    pub parameters: BTreeMap<String, Value>,
}

impl fmt::Display for Collision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params = serde_json::to_string(&self.parameters).unwrap_or_default();
        write!(f, "suite {} with parameters {params} has conflicting outcomes", self.suite)
    }
}

/// Sorts reports by suite and parameters and drops exact duplicates. The same
/// suite and parameters with different outcomes is a collision.
pub fn merge(reports: Vec<SuiteReport>) -> Result<Aggregate, Collision> {
    let mut by_key: BTreeMap<(String, String), SuiteReport> = BTreeMap::new();
    for r in reports {
        let key = (r.suite.clone(), serde_json::to_string(&r.parameters).expect("parameters serialize"));
        match by_key.get(&key) {
            Some(prev) if prev.status != r.status => {
                return Err(Collision { suite: r.suite, parameters: r.parameters });
            }
            Some(_) => {}
            None => {
                by_key.insert(key, r);
            }
        }
    }
    let reports: Vec<SuiteReport> = by_key.into_values().collect();
    let status = if reports.iter().any(|r| r.status == Status::Fail) { Status::Fail } else { Status::Pass };
    Ok(Aggregate { status, reports })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(suite: &str, n: usize, ok: bool) -> SuiteReport {
        let mut r = SuiteReport::new(suite, BTreeMap::from([("n".to_string(), Value::from(n))]));
        r.push(Check::verdict("x", ok));
        r
    }

    #[test]
    fn merge_cases() {
        let empty = merge(Vec::new()).unwrap();
        assert_eq!(empty.status, Status::Pass);
        assert!(empty.reports.is_empty());

        let two = merge(vec![report("lr", 4, true), report("wilcox", 4, true)]).unwrap();
        assert_eq!(two.status, Status::Pass);
        assert_eq!(two.reports.len(), 2);

        let mixed = merge(vec![report("lr", 4, true), report("lr", 5, false)]).unwrap();
        assert_eq!(mixed.status, Status::Fail);

        assert!(merge(vec![report("lr", 4, true), report("lr", 4, false)]).is_err());
    }

    #[test]
    fn flagged_is_not_a_failure() {
        let mut r = SuiteReport::new("dipper-du", BTreeMap::new());
        r.push(Check::new("attainment", Status::Flagged));
        assert!(r.passed());
        r.push(Check::theorem("vertex", false));
        assert!(!r.passed());
        assert!(r.records[1].description.ends_with(THEOREM_CONTRADICTION));
    }

    #[test]
    fn serialization_is_stable() {
        let r = report("lr", 3, true);
        assert_eq!(r.to_json(), report("lr", 3, true).to_json());
        let back: SuiteReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }
}
