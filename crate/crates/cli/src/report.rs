//! Verification report structure shared by the text and JSON renderers.

use std::fmt::Write as _;

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub params: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckOutcome>,
    pub wall_ms: u128,
}

impl SuiteReport {
    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suites: Vec<SuiteReport>,
}

impl VerificationReport {
    pub fn failures(&self) -> usize {
        self.suites.iter().map(SuiteReport::failures).sum()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let width = self
            .suites
            .iter()
            .flat_map(|s| &s.checks)
            .map(|c| c.name.len())
            .max()
            .unwrap_or(0);
        for suite in &self.suites {
            let _ = writeln!(
                out,
                "suite {}: {} checks, {} failures, {} ms",
                suite.suite,
                suite.checks.len(),
                suite.failures(),
                suite.wall_ms
            );
            for check in &suite.checks {
                let verdict = if check.passed { "PASS" } else { "FAIL" };
                let _ = write!(out, "  {verdict} {:<width$}  ({})", check.name, check.params);
                if let Some(cx) = &check.counterexample {
                    let _ = write!(out, " — {cx}");
                }
                out.push('\n');
            }
        }
        let total: usize = self.suites.iter().map(|s| s.checks.len()).sum();
        let _ = writeln!(out, "total: {} checks, {} failures", total, self.failures());
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is plain data")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> VerificationReport {
        VerificationReport {
            suites: vec![SuiteReport {
                suite: "demo".into(),
                checks: vec![
                    CheckOutcome {
                        name: "ok check".into(),
                        params: "m=2".into(),
                        passed: true,
                        counterexample: None,
                    },
                    CheckOutcome {
                        name: "bad check".into(),
                        params: "m=3".into(),
                        passed: false,
                        counterexample: Some("n=7".into()),
                    },
                ],
                wall_ms: 1,
            }],
        }
    }

    #[test]
    fn counts_failures() {
        assert_eq!(sample().failures(), 1);
    }

    #[test]
    fn text_rendering_lists_each_check() {
        let text = sample().to_text();
        assert!(text.contains("PASS ok check"));
        assert!(text.contains("FAIL bad check"));
        assert!(text.contains("— n=7"));
        assert!(text.ends_with("total: 2 checks, 1 failures\n"));
    }

    #[test]
    fn json_rendering_is_parseable() {
        let value: serde_json::Value = serde_json::from_str(&sample().to_json()).unwrap();
        assert_eq!(value["suites"][0]["checks"][1]["passed"], false);
    }
}
