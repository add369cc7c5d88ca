//! Machine-readable verification reports.
//!
//! A [`VerificationReport`] collects the outcomes of named checks along
//! with the randomness parameters that make a run reproducible. The JSON
//! form is stable: struct fields are declared in alphabetical order so
//! the serializer emits sorted keys, checks are sorted by id, and the
//! per-check timing is normalized to zero so two runs with the same seed
//! and prime produce byte-identical output. Wall-clock timings are
//! reported in the human-readable text form instead.

use serde::{Deserialize, Serialize};

/// Outcome of a single check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

/// One named check with its expected and computed values in canonical
/// text form. A passing comparison check has `expected == actual`;
/// certificate checks carry their witness in `actual` instead.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub actual: Option<String>,
    pub elapsed_ms: u64,
    pub expected: Option<String>,
    pub id: String,
    /// Short label of the published claim the check verifies.
    pub paper_anchor: String,
    pub status: CheckStatus,
}

/// Randomness parameters and version stamp of a suite run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportMetadata {
    pub prime: u64,
    pub seed: u64,
    pub version: String,
}

/// A full suite run: schema version, sorted checks, and metadata.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub metadata: ReportMetadata,
    pub schema: u32,
}

/// Current JSON schema version.
pub const REPORT_SCHEMA: u32 = 1;

impl VerificationReport {
    pub fn new(seed: u64, prime: u64, version: &str) -> Self {
        VerificationReport {
            checks: Vec::new(),
            metadata: ReportMetadata {
                prime,
                seed,
                version: version.to_string(),
            },
            schema: REPORT_SCHEMA,
        }
    }

    /// Sorts checks by id; emission order is independent of execution
    /// order.
    pub fn sort_checks(&mut self) {
        self.checks.sort_by(|a, b| a.id.cmp(&b.id));
    }

    pub fn count(&self, status: CheckStatus) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn failures(&self) -> usize {
        self.count(CheckStatus::Fail)
    }

    /// Stable pretty JSON with sorted keys and timings normalized to
    /// zero. Byte-identical across runs with the same seed and prime.
    pub fn to_json(&self) -> String {
        let mut stable = self.clone();
        stable.sort_checks();
        for c in &mut stable.checks {
            c.elapsed_ms = 0;
        }
        let mut out = serde_json::to_string_pretty(&stable).expect("report serializes");
        out.push('\n');
        out
    }

    /// Human-readable listing: one line per check with its anchor label
    /// and wall-clock timing, followed by a summary line.
    pub fn to_text(&self) -> String {
        let mut stable = self.clone();
        stable.sort_checks();
        let mut out = String::new();
        for c in &stable.checks {
            let status = match c.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skipped => "SKIP",
            };
            out.push_str(&format!(
                "{} {} [{}] ({} ms)\n",
                status, c.id, c.paper_anchor, c.elapsed_ms
            ));
            if c.status == CheckStatus::Fail {
                if let Some(e) = &c.expected {
                    out.push_str(&format!("  expected: {}\n", e));
                }
                if let Some(a) = &c.actual {
                    out.push_str(&format!("  actual:   {}\n", a));
                }
            }
        }
        out.push_str(&format!(
            "{} checks: {} passed, {} failed, {} skipped (seed {}, prime {})\n",
            stable.checks.len(),
            stable.count(CheckStatus::Pass),
            stable.count(CheckStatus::Fail),
            stable.count(CheckStatus::Skipped),
            stable.metadata.seed,
            stable.metadata.prime,
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> VerificationReport {
        let mut r = VerificationReport::new(42, 10007, "0.1.0");
        r.checks.push(Check {
            actual: Some("81*x1^2*x2^2".into()),
            elapsed_ms: 3,
            expected: Some("81*x1^2*x2^2".into()),
            id: "b.second".into(),
            paper_anchor: "specialized discriminant".into(),
            status: CheckStatus::Pass,
        });
        r.checks.push(Check {
            actual: None,
            elapsed_ms: 0,
            expected: None,
            id: "a.first".into(),
            paper_anchor: "external input required".into(),
            status: CheckStatus::Skipped,
        });
        r
    }

    #[test]
    fn json_is_sorted_and_round_trips() {
        let r = sample();
        let json = r.to_json();
        // Sorted keys at every level.
        let checks_pos = json.find("\"checks\"").unwrap();
        let metadata_pos = json.find("\"metadata\"").unwrap();
        let schema_pos = json.find("\"schema\"").unwrap();
        assert!(checks_pos < metadata_pos && metadata_pos < schema_pos);
        let a_pos = json.find("a.first").unwrap();
        let b_pos = json.find("b.second").unwrap();
        assert!(a_pos < b_pos, "checks sorted by id");
        // Timings normalized.
        assert!(!json.contains("\"elapsed_ms\": 3"));

        let back: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back.schema, REPORT_SCHEMA);
        assert_eq!(back.checks.len(), 2);
        assert_eq!(back.metadata.seed, 42);
        assert_eq!(back.metadata.prime, 10007);
        assert_eq!(back.checks[0].id, "a.first");
        assert_eq!(back.checks[0].status, CheckStatus::Skipped);
        assert_eq!(back.checks[1].status, CheckStatus::Pass);
    }

    #[test]
    fn json_is_byte_identical_across_runs() {
        assert_eq!(sample().to_json(), sample().to_json());
    }

    #[test]
    fn empty_report_serializes() {
        let r = VerificationReport::new(0, 10007, "0.1.0");
        let json = r.to_json();
        assert!(json.contains("\"checks\": []"));
        assert_eq!(r.failures(), 0);
    }

    #[test]
    fn text_lists_every_check_with_anchor() {
        let r = sample();
        let text = r.to_text();
        assert!(text.contains("PASS b.second [specialized discriminant]"));
        assert!(text.contains("SKIP a.first"));
        assert!(text.contains("2 checks: 1 passed, 0 failed, 1 skipped"));
        // Real timing appears in text.
        assert!(text.contains("(3 ms)"));
    }

    #[test]
    fn status_serializes_lowercase() {
        assert_eq!(
            serde_json::to_string(&CheckStatus::Skipped).unwrap(),
            "\"skipped\""
        );
        assert_eq!(serde_json::to_string(&CheckStatus::Pass).unwrap(), "\"pass\"");
        assert_eq!(serde_json::to_string(&CheckStatus::Fail).unwrap(), "\"fail\"");
    }
}
