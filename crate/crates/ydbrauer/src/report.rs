//! Verification reports with deterministic serialization.
//!
//! The json form is stable across runs: fields are declared in
//! alphabetical order so keys come out sorted, and timing lives in a
//! field that is skipped during serialization. The text form is for
//! humans and includes the timings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::hopf::algebra::{AxiomCheck, AxiomReport};

/// One named check with a verdict string. `ok` is the machine verdict;
/// `verdict` is free-form ("pass", "fail", or an informative summary
/// such as a rank readout).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportCheck {
    #[serde(skip)]
    pub millis: u128,
    pub name: String,
    pub ok: bool,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<usize>>,
}

impl ReportCheck {
    pub fn flag(name: impl Into<String>, ok: bool) -> Self {
        ReportCheck {
            millis: 0,
            name: name.into(),
            ok,
            verdict: if ok { "pass" } else { "fail" }.into(),
            witness: None,
        }
    }

    /// A check whose verdict string carries extra detail.
    pub fn info(name: impl Into<String>, ok: bool, verdict: impl Into<String>) -> Self {
        ReportCheck { millis: 0, name: name.into(), ok, verdict: verdict.into(), witness: None }
    }

    pub fn from_axiom(check: &AxiomCheck) -> Self {
        ReportCheck {
            millis: 0,
            name: check.name.clone(),
            ok: check.ok,
            verdict: if check.ok { "pass" } else { "fail" }.into(),
            witness: check.witness.clone(),
        }
    }

    pub fn from_axiom_report(report: &AxiomReport) -> Vec<Self> {
        report.checks.iter().map(Self::from_axiom).collect()
    }

    pub fn timed(mut self, millis: u128) -> Self {
        self.millis = millis;
        self
    }
}

/// A full command report. Overall is "pass" exactly when every check
/// passed, so the process exit code is derivable from the report alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<ReportCheck>,
    pub command: String,
    pub overall: String,
}

impl Report {
    pub fn new(command: impl Into<String>, checks: Vec<ReportCheck>) -> Self {
        let overall = if checks.iter().all(|c| c.ok) { "pass" } else { "fail" };
        Report { checks, command: command.into(), overall: overall.into() }
    }

    pub fn passed(&self) -> bool {
        self.overall == "pass"
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

/// Render a report. Json output is byte-identical for identical inputs;
/// text output appends per-check timings.
pub fn emit_report(report: &Report, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(report)
                .expect("report serialization is infallible");
            s.push('\n');
            s
        }
        ReportFormat::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "command: {}", report.command);
            for c in &report.checks {
                let _ = write!(out, "{}: {}", c.name, c.verdict);
                if let Some(w) = &c.witness {
                    let _ = write!(out, "  [witness {w:?}]");
                }
                let _ = writeln!(out, "  ({} ms)", c.millis);
            }
            let _ = writeln!(out, "overall: {}", report.overall);
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_passes_with_empty_checks_array() {
        let r = Report::new("noop", vec![]);
        assert!(r.passed());
        assert_eq!(r.exit_code(), 0);
        let json = emit_report(&r, ReportFormat::Json);
        assert!(json.contains("\"checks\": []"));
        assert!(json.contains("\"overall\": \"pass\""));
    }

    #[test]
    fn one_failing_check_fails_in_both_formats() {
        let r = Report::new(
            "verify something",
            vec![ReportCheck::flag("good", true), ReportCheck::flag("bad", false).timed(3)],
        );
        assert!(!r.passed());
        assert_eq!(r.exit_code(), 1);
        let json = emit_report(&r, ReportFormat::Json);
        assert!(json.contains("\"overall\": \"fail\""));
        let text = emit_report(&r, ReportFormat::Text);
        assert!(text.contains("bad: fail"));
        assert!(text.contains("overall: fail"));
        assert!(text.contains("(3 ms)"));
    }

    #[test]
    fn json_is_deterministic_and_skips_timing() {
        let mut a = Report::new(
            "check azumaya",
            vec![ReportCheck::info("azumaya", true, "F rank 4/4, G rank 4/4, H-Azumaya: yes")],
        );
        let first = emit_report(&a, ReportFormat::Json);
        a.checks[0].millis = 999;
        let second = emit_report(&a, ReportFormat::Json);
        assert_eq!(first, second);
        assert!(!first.contains("millis"));

        // Keys arrive sorted because fields are declared alphabetically.
        let name_at = first.find("\"name\"").unwrap();
        let ok_at = first.find("\"ok\"").unwrap();
        let verdict_at = first.find("\"verdict\"").unwrap();
        assert!(name_at < ok_at && ok_at < verdict_at);
    }

    #[test]
    fn witness_round_trips_through_json() {
        let r = Report::new(
            "verify yd",
            vec![{
                let mut c = ReportCheck::flag("compatibility", false);
                c.witness = Some(vec![1, 0]);
                c.timed(7)
            }],
        );
        let json = emit_report(&r, ReportFormat::Json);
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back.checks[0].witness, Some(vec![1, 0]));
        assert_eq!(back.checks[0].millis, 0);
        assert_eq!(back.overall, "fail");
    }
}
