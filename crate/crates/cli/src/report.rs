//! Verification reports and their two renderings.

use std::fmt::Write as _;

use serde::Serialize;

/// Outcome of one instance or of a whole suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Confirmed,
    Counterexample,
    Skipped,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Confirmed => "confirmed",
            Verdict::Counterexample => "counterexample",
            Verdict::Skipped => "skipped",
        }
    }
}

/// Report rendering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    /// `key: value` blocks.
    Text,
    /// JSON.
    Structured,
}

/// One checked algebra.
#[derive(Clone, Debug, Serialize)]
pub struct InstanceRecord {
    pub name: String,
    pub fingerprint: String,
    pub status: Verdict,
    /// Predicate outcomes in a fixed order.
    pub outcomes: Vec<(String, String)>,
    /// Present on counterexamples and skips.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl InstanceRecord {
    pub fn new(name: impl Into<String>, fingerprint: impl Into<String>) -> Self {
        InstanceRecord {
            name: name.into(),
            fingerprint: fingerprint.into(),
            status: Verdict::Confirmed,
            outcomes: Vec::new(),
            witness: None,
        }
    }

    pub fn outcome(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.outcomes.push((key.to_string(), value.to_string()));
        self
    }

    /// Marks a counterexample unless one was already recorded.
    pub fn fail(&mut self, witness: impl Into<String>) -> &mut Self {
        if self.status != Verdict::Counterexample {
            self.status = Verdict::Counterexample;
            self.witness = Some(witness.into());
        }
        self
    }

    /// Records a check; a false `ok` becomes a counterexample.
    pub fn expect(&mut self, ok: bool, witness: impl FnOnce() -> String) -> &mut Self {
        if !ok {
            self.fail(witness());
        }
        self
    }

    pub fn skip(&mut self, reason: impl Into<String>) -> &mut Self {
        self.status = Verdict::Skipped;
        self.witness = Some(reason.into());
        self
    }
}

/// Everything a suite run produced.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub parameters: Vec<(String, String)>,
    pub verdict: Verdict,
    pub notes: Vec<String>,
    pub instances: Vec<InstanceRecord>,
}

impl VerificationReport {
    pub fn new(
        suite: &str,
        parameters: Vec<(String, String)>,
        instances: Vec<InstanceRecord>,
    ) -> Self {
        let verdict = if instances
            .iter()
            .any(|i| i.status == Verdict::Counterexample)
        {
            Verdict::Counterexample
        } else if !instances.is_empty() && instances.iter().all(|i| i.status == Verdict::Skipped) {
            Verdict::Skipped
        } else {
            Verdict::Confirmed
        };
        VerificationReport {
            suite: suite.to_string(),
            parameters,
            verdict,
            notes: Vec::new(),
            instances,
        }
    }

    /// A run refused by a size guard.
    pub fn skipped(
        suite: &str,
        parameters: Vec<(String, String)>,
        reason: impl Into<String>,
    ) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            parameters,
            verdict: Verdict::Skipped,
            notes: vec![reason.into()],
            instances: Vec::new(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn count(&self, status: Verdict) -> usize {
        self.instances.iter().filter(|i| i.status == status).count()
    }

    pub fn counterexamples(&self) -> impl Iterator<Item = &InstanceRecord> {
        self.instances
            .iter()
            .filter(|i| i.status == Verdict::Counterexample)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Structured => {
                let mut s = serde_json::to_string_pretty(self).expect("report is plain data");
                s.push('\n');
                s
            }
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite: {}", self.suite);
        for (k, v) in &self.parameters {
            let _ = writeln!(out, "param.{k}: {v}");
        }
        let _ = writeln!(out, "verdict: {}", self.verdict.as_str());
        let _ = writeln!(out, "instances: {}", self.instances.len());
        for status in [
            Verdict::Confirmed,
            Verdict::Counterexample,
            Verdict::Skipped,
        ] {
            let _ = writeln!(out, "{}: {}", status.as_str(), self.count(status));
        }
        for n in &self.notes {
            let _ = writeln!(out, "note: {n}");
        }
        for i in &self.instances {
            out.push('\n');
            let _ = writeln!(out, "instance: {}", i.name);
            let _ = writeln!(out, "fingerprint: {}", i.fingerprint);
            let _ = writeln!(out, "status: {}", i.status.as_str());
            for (k, v) in &i.outcomes {
                let _ = writeln!(out, "{k}: {v}");
            }
            if let Some(w) = &i.witness {
                let _ = writeln!(out, "witness: {w}");
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_aggregation() {
        let mut a = InstanceRecord::new("a", "f");
        a.outcome("x", true);
        let mut b = InstanceRecord::new("b", "g");
        b.skip("too big");
        let r = VerificationReport::new("s", vec![], vec![a.clone(), b.clone()]);
        assert_eq!(r.verdict, Verdict::Confirmed);
        let mut c = InstanceRecord::new("c", "h");
        c.expect(false, || "w".into());
        let r = VerificationReport::new("s", vec![], vec![a, b, c]);
        assert_eq!(r.verdict, Verdict::Counterexample);
        assert!(r.to_text().contains("witness: w"));
        assert!(r.render(Format::Structured).contains("\"counterexample\""));
    }
}
