use std::collections::BTreeMap;
use std::time::Duration;

use serde_json::{json, Value};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Skipped(String),
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skipped(_) => "skipped",
        }
    }
}

/// Outcome of one check. A failing report always carries a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    check: String,
    params: BTreeMap<String, Value>,
    verdict: Verdict,
    witness: Option<String>,
    elapsed: Option<Duration>,
}

impl VerificationReport {
    fn new(check: &str, params: &[(&str, Value)], verdict: Verdict, witness: Option<String>) -> Self {
        VerificationReport {
            check: check.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            verdict,
            witness,
            elapsed: None,
        }
    }

    pub fn pass(check: &str, params: &[(&str, Value)], witness: Option<String>) -> Self {
        Self::new(check, params, Verdict::Pass, witness)
    }

    pub fn fail(check: &str, params: &[(&str, Value)], witness: String) -> Self {
        Self::new(check, params, Verdict::Fail, Some(witness))
    }

    pub fn skipped(check: &str, params: &[(&str, Value)], reason: impl Into<String>) -> Self {
        Self::new(check, params, Verdict::Skipped(reason.into()), None)
    }

    /// Pass or fail depending on `ok`, with the same witness either way.
    pub fn verdict(check: &str, params: &[(&str, Value)], ok: bool, witness: String) -> Self {
        if ok {
            Self::pass(check, params, Some(witness))
        } else {
            Self::fail(check, params, witness)
        }
    }

    pub fn check(&self) -> &str {
        &self.check
    }

    pub fn params(&self) -> &BTreeMap<String, Value> {
        &self.params
    }

    pub fn status(&self) -> &Verdict {
        &self.verdict
    }

    pub fn witness(&self) -> Option<&str> {
        self.witness.as_deref()
    }

    pub fn is_pass(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn is_fail(&self) -> bool {
        self.verdict == Verdict::Fail
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self.verdict, Verdict::Skipped(_))
    }

    pub fn elapsed(&self) -> Option<Duration> {
        self.elapsed
    }

    pub fn set_elapsed(&mut self, d: Duration) {
        self.elapsed = Some(d);
    }

    /// One JSON object on one line with sorted keys. Timing is included only
    /// on request, so that default output is byte-identical across runs.
    pub fn to_json_line(&self, with_timing: bool) -> String {
        let mut obj = json!({
            "check": self.check,
            "params": self.params,
            "verdict": self.verdict.label(),
        });
        if let Verdict::Skipped(reason) = &self.verdict {
            obj["reason"] = json!(reason);
        }
        if let Some(w) = &self.witness {
            obj["witness"] = json!(w);
        }
        if with_timing {
            if let Some(d) = self.elapsed {
                obj["elapsed_ms"] = json!(d.as_millis() as u64);
            }
        }
        obj.to_string()
    }
}
