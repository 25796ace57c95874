use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// One case where the two sides disagreed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    /// Canonical key of the case; reports list mismatches sorted by it.
    pub case: String,
    pub inputs: Value,
    pub expected: String,
    pub actual: String,
}

/// Outcome of a verification campaign.
///
/// `pass` is set exactly when `mismatches` is empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: String,
    pub params: BTreeMap<String, Value>,
    pub cases: u64,
    pub mismatches: Vec<Mismatch>,
    /// Named values observed during the run (e.g. pair counts).
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, Value>,
    pub elapsed_ms: u64,
    pub pass: bool,
}

impl VerificationReport {
    /// Merges reports of sub-campaigns under a new identity.
    pub fn merge(
        identity: &str,
        params: BTreeMap<String, Value>,
        parts: Vec<VerificationReport>,
    ) -> Self {
        let mut builder = ReportBuilder::new(identity, params);
        let mut elapsed = 0;
        for part in parts {
            builder.cases += part.cases;
            builder.mismatches.extend(part.mismatches);
            for (key, value) in part.details {
                builder
                    .details
                    .insert(format!("{}.{key}", part.identity), value);
            }
            elapsed += part.elapsed_ms;
        }
        let mut report = builder.finish();
        report.elapsed_ms = report.elapsed_ms.max(elapsed);
        report
    }

    /// Zeroes the wall time so that output is reproducible byte for byte.
    pub fn without_timing(mut self) -> Self {
        self.elapsed_ms = 0;
        self
    }
}

pub(crate) struct ReportBuilder {
    identity: String,
    params: BTreeMap<String, Value>,
    pub(crate) cases: u64,
    pub(crate) mismatches: Vec<Mismatch>,
    pub(crate) details: BTreeMap<String, Value>,
    started: Instant,
}

impl ReportBuilder {
    pub(crate) fn new(identity: &str, params: BTreeMap<String, Value>) -> Self {
        ReportBuilder {
            identity: identity.to_string(),
            params,
            cases: 0,
            mismatches: Vec::new(),
            details: BTreeMap::new(),
            started: Instant::now(),
        }
    }

    /// Records one case, or a mismatch when `expected != actual`.
    pub(crate) fn check<T: PartialEq + ToString>(
        &mut self,
        case: String,
        inputs: Value,
        expected: &T,
        actual: &T,
    ) {
        self.cases += 1;
        if expected != actual {
            self.mismatches.push(Mismatch {
                case,
                inputs,
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    pub(crate) fn absorb(&mut self, outcomes: Vec<(String, Value, String, String)>) {
        for (case, inputs, expected, actual) in outcomes {
            self.check(case, inputs, &expected, &actual);
        }
    }

    pub(crate) fn finish(mut self) -> VerificationReport {
        self.mismatches.sort_by(|a, b| a.case.cmp(&b.case));
        let pass = self.mismatches.is_empty();
        VerificationReport {
            identity: self.identity,
            params: self.params,
            cases: self.cases,
            mismatches: self.mismatches,
            details: self.details,
            elapsed_ms: self.started.elapsed().as_millis() as u64,
            pass,
        }
    }
}

/// `{"a": 1, ...}` from `(name, value)` pairs.
pub(crate) fn params<const N: usize>(pairs: [(&str, Value); N]) -> BTreeMap<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

#[cfg(test)]
mod tests {
    use serde_json::json;

    use super::*;

    #[test]
    fn pass_flag_tracks_mismatches() {
        let mut b = ReportBuilder::new("demo", params([("k", json!(2))]));
        b.check("a".into(), json!({}), &1, &1);
        let ok = b.finish();
        assert!(ok.pass);
        assert_eq!(ok.cases, 1);

        let mut b = ReportBuilder::new("demo", BTreeMap::new());
        b.check("b".into(), json!({}), &1, &2);
        b.check("a".into(), json!({}), &3, &4);
        let bad = b.finish();
        assert!(!bad.pass);
        assert_eq!(bad.mismatches[0].case, "a");
        assert_eq!(bad.mismatches[1].expected, "1");
    }

    #[test]
    fn json_fields() {
        let report = ReportBuilder::new("demo", params([("m", json!(2))]))
            .finish()
            .without_timing();
        let text = serde_json::to_string(&report).unwrap();
        assert_eq!(
            text,
            r#"{"identity":"demo","params":{"m":2},"cases":0,"mismatches":[],"elapsed_ms":0,"pass":true}"#
        );
        let back: VerificationReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
    }
}
