//! Verification reports: one entry per check, an overall flag and a content
//! hash that ignores timing.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct CheckResult {
    pub id: u32,
    pub name: String,
    /// The statement being checked.
    pub claim: String,
    pub status: Status,
    pub witness: Value,
    pub timing_ms: f64,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct ReportParams {
    pub n: usize,
    pub deg: u32,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct VerificationReport {
    pub params: ReportParams,
    pub checks: Vec<CheckResult>,
    pub pass: bool,
    /// SHA-256 of the report with `timing_ms` and this field removed, keys sorted.
    pub content_hash: String,
}

impl VerificationReport {
    pub fn exit_code(&self) -> i32 {
        if self.pass {
            crate::error::EXIT_OK
        } else {
            crate::error::EXIT_CHECK_FAILED
        }
    }

    pub fn failing(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

pub fn emit_report(params: ReportParams, mut checks: Vec<CheckResult>) -> Result<VerificationReport, CliError> {
    if checks.is_empty() {
        return Err(CliError::Usage("no checks were selected".into()));
    }
    checks.sort_by_key(|c| c.id);
    let pass = checks.iter().all(|c| c.status == Status::Pass);
    let mut report = VerificationReport { params, checks, pass, content_hash: String::new() };
    report.content_hash = content_hash(&report);
    Ok(report)
}

pub fn content_hash(report: &VerificationReport) -> String {
    let mut v = serde_json::to_value(report).expect("report serializes");
    if let Value::Object(map) = &mut v {
        map.remove("content_hash");
        if let Some(Value::Array(checks)) = map.get_mut("checks") {
            for c in checks {
                if let Value::Object(c) = c {
                    c.remove("timing_ms");
                }
            }
        }
    }
    // serde_json maps are ordered by key, so this is canonical.
    let bytes = serde_json::to_vec(&v).expect("value serializes");
    let digest = Sha256::digest(&bytes);
    digest.iter().fold(String::with_capacity(64), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

pub fn render_pretty(report: &VerificationReport) -> String {
    let mut out = String::new();
    let p = &report.params;
    let _ = writeln!(out, "verification report  n={}  deg={}  seed={}", p.n, p.deg, p.seed);
    for c in &report.checks {
        let status = match c.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        let _ = writeln!(out, "{status} {:>2} {:<24} {:>10.1} ms  {}", c.id, c.name, c.timing_ms, c.claim);
        if c.status == Status::Fail {
            let _ = writeln!(out, "        witness: {}", c.witness);
        }
    }
    let passed = report.checks.iter().filter(|c| c.status == Status::Pass).count();
    let _ = writeln!(out, "{passed}/{} checks passed; overall {}", report.checks.len(), if report.pass { "PASS" } else { "FAIL" });
    let _ = writeln!(out, "content hash {}", report.content_hash);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(id: u32, status: Status, timing_ms: f64) -> CheckResult {
        CheckResult { id, name: format!("c{id}"), claim: "x".into(), status, witness: Value::Null, timing_ms }
    }

    fn params() -> ReportParams {
        ReportParams { n: 2, deg: 4, seed: 7 }
    }

    #[test]
    fn empty_report_is_a_usage_error() {
        assert!(matches!(emit_report(params(), vec![]), Err(CliError::Usage(_))));
    }

    #[test]
    fn single_pass_and_one_failure() {
        assert!(emit_report(params(), vec![check(1, Status::Pass, 1.0)]).unwrap().pass);
        let r = emit_report(params(), vec![check(1, Status::Pass, 1.0), check(2, Status::Fail, 1.0)]).unwrap();
        assert!(!r.pass);
        assert_eq!(r.exit_code(), 1);
        assert_eq!(r.failing().count(), 1);
    }

    #[test]
    fn hash_ignores_timing_only() {
        let a = emit_report(params(), vec![check(1, Status::Pass, 1.0)]).unwrap();
        let b = emit_report(params(), vec![check(1, Status::Pass, 99.0)]).unwrap();
        let c = emit_report(params(), vec![check(1, Status::Fail, 1.0)]).unwrap();
        assert_eq!(a.content_hash, b.content_hash);
        assert_ne!(a.content_hash, c.content_hash);
        assert_eq!(a.content_hash.len(), 64);
    }
}
