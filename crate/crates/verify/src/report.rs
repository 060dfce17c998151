use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

/// How an expected value is justified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Provenance {
    /// Stated in the source being checked.
    #[serde(rename = "PAPER")]
    Stated,
    /// Immediate from definitions.
    #[serde(rename = "TRIVIAL")]
    Trivial,
    /// Obtained by an independent calculation.
    #[serde(rename = "DERIVED")]
    Derived,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_id: String,
    pub description: String,
    #[serde(rename = "paper_anchor")]
    pub anchor: String,
    pub expected: String,
    pub computed: String,
    pub provenance: Provenance,
    pub pass: bool,
    /// Wall time in milliseconds; only recorded on request so that default
    /// reports are reproducible byte for byte.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub version: String,
    pub checks: Vec<CheckResult>,
    pub passed: usize,
    pub failed: usize,
}

impl VerificationReport {
    pub fn new(checks: Vec<CheckResult>) -> Self {
        let passed = checks.iter().filter(|c| c.pass).count();
        let failed = checks.len() - passed;
        VerificationReport {
            version: env!("CARGO_PKG_VERSION").to_string(),
            checks,
            passed,
            failed,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }

    /// One line per check (only failures when `quiet`), then a summary.
    pub fn render_text(&self, quiet: bool) -> String {
        let width = self
            .checks
            .iter()
            .map(|c| c.check_id.len())
            .max()
            .unwrap_or(0);
        let mut out = String::new();
        for c in self.checks.iter().filter(|c| !quiet || !c.pass) {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            let _ = write!(
                out,
                "{tag}  {:<width$}  expected {}  computed {}",
                c.check_id, c.expected, c.computed
            );
            if let Some(ms) = c.elapsed {
                let _ = write!(out, "  ({ms} ms)");
            }
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "lgcheck {}: {} passed, {} failed, {} checks",
            self.version,
            self.passed,
            self.failed,
            self.checks.len()
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn result(pass: bool) -> CheckResult {
        CheckResult {
            check_id: "x.y".into(),
            description: "d".into(),
            anchor: "plumbing".into(),
            expected: "1".into(),
            computed: if pass { "1" } else { "2" }.into(),
            provenance: Provenance::Trivial,
            pass,
            elapsed: None,
        }
    }

    #[test]
    fn counts_follow_the_list() {
        let r = VerificationReport::new(vec![result(true), result(false), result(true)]);
        assert_eq!((r.passed, r.failed), (2, 1));
        assert!(!r.all_passed());
    }

    #[test]
    fn json_field_names_and_omitted_elapsed() {
        let json = VerificationReport::new(vec![result(true)])
            .to_json()
            .unwrap();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        let c = &v["checks"][0];
        assert_eq!(c["paper_anchor"], "plumbing");
        assert_eq!(c["provenance"], "TRIVIAL");
        assert!(c.get("elapsed").is_none());
        let back: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back.checks[0], result(true));
    }

    #[test]
    fn quiet_text_lists_only_failures() {
        let r = VerificationReport::new(vec![result(true), result(false)]);
        let text = r.render_text(true);
        assert_eq!(text.lines().count(), 2);
        assert!(text.starts_with("FAIL"));
    }
}
