//! Check reports: one record per law, with witnesses for the first failure.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::time::Duration;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// A bounded search could not decide; counted as a failure in the verdict.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawRecord {
    pub law: String,
    pub anchor: String,
    pub status: Status,
    pub checked: u64,
    /// Set when the instances were sampled rather than enumerated.
    pub seed: Option<u64>,
    pub witness: Option<String>,
}

impl LawRecord {
    pub fn new(law: impl Into<String>, anchor: impl Into<String>) -> Self {
        LawRecord {
            law: law.into(),
            anchor: anchor.into(),
            status: Status::Pass,
            checked: 0,
            seed: None,
            witness: None,
        }
    }

    pub fn tick(&mut self) {
        self.checked += 1;
    }

    /// Records a failure; only the first witness is kept.
    pub fn fail(&mut self, witness: impl fmt::Display) {
        if self.status != Status::Fail {
            self.status = Status::Fail;
            self.witness = Some(witness.to_string());
        }
    }

    pub fn inconclusive(&mut self, witness: impl fmt::Display) {
        if self.status == Status::Pass {
            self.status = Status::Inconclusive;
            self.witness = Some(witness.to_string());
        }
    }

    /// Records `ok` for one instance, building the witness lazily.
    pub fn expect<W: fmt::Display>(&mut self, ok: bool, witness: impl FnOnce() -> W) -> bool {
        self.tick();
        if !ok {
            self.fail(witness());
        }
        ok
    }

    pub fn sampled_with(mut self, seed: Option<u64>) -> Self {
        self.seed = seed;
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckReport {
    pub suite: String,
    pub verdict: Status,
    pub records: Vec<LawRecord>,
    /// Not serialized: the exported document must be byte-identical across runs.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl CheckReport {
    pub fn new(suite: impl Into<String>) -> Self {
        CheckReport { suite: suite.into(), verdict: Status::Pass, records: Vec::new(), wall_time: Duration::ZERO }
    }

    pub fn push(&mut self, record: LawRecord) {
        self.records.push(record);
        self.refresh();
    }

    /// Appends another report's records, prefixing their law ids with its suite.
    pub fn absorb(&mut self, other: CheckReport) {
        for mut r in other.records {
            r.law = format!("{}/{}", other.suite, r.law);
            self.records.push(r);
        }
        self.wall_time += other.wall_time;
        self.refresh();
    }

    fn refresh(&mut self) {
        self.verdict = if self.records.iter().all(LawRecord::passed) { Status::Pass } else { Status::Fail };
    }

    pub fn passed(&self) -> bool {
        self.verdict == Status::Pass
    }

    pub fn record(&self, law: &str) -> Option<&LawRecord> {
        self.records.iter().find(|r| r.law == law)
    }

    pub fn first_failure(&self) -> Option<&LawRecord> {
        self.records.iter().find(|r| !r.passed())
    }

    /// Two-space indented JSON with a trailing newline.
    pub fn to_document(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let tag = match r.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Inconclusive => "INCONCLUSIVE",
            };
            out.push_str(&format!("[{tag}] {} ({} checked)", r.law, r.checked));
            if let Some(w) = &r.witness {
                out.push_str(&format!(" witness: {w}"));
            }
            out.push('\n');
        }
        out
    }
}

pub fn export_report(report: &CheckReport, path: &std::path::Path) -> std::io::Result<()> {
    std::fs::write(path, report.to_document())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_passes() {
        let r = CheckReport::new("empty");
        assert!(r.passed());
        let doc = r.to_document();
        assert!(doc.contains("\"records\": []"));
        assert!(doc.ends_with('\n'));
    }

    #[test]
    fn first_witness_wins() {
        let mut l = LawRecord::new("x", "y");
        l.fail("first");
        l.fail("second");
        assert_eq!(l.witness.as_deref(), Some("first"));
        let mut r = CheckReport::new("s");
        r.push(l);
        assert!(!r.passed());
    }

    #[test]
    fn inconclusive_fails_verdict() {
        let mut l = LawRecord::new("x", "y");
        l.inconclusive("bound");
        let mut r = CheckReport::new("s");
        r.push(l);
        assert_eq!(r.verdict, Status::Fail);
    }
}
