use std::fmt::{self, Write as _};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// A closed form checked against an independent computation.
    Formula,
    /// An exhaustive enumeration checked against something else.
    BruteForce,
    /// Two independent algorithms compared.
    CrossCheck,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Provenance::Formula => "formula",
            Provenance::BruteForce => "brute-force",
            Provenance::CrossCheck => "cross-check",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Comparison {
    pub label: String,
    pub provenance: Provenance,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub label: String,
    pub seconds: f64,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: Vec<(String, Value)>,
    pub results: Vec<(String, Value)>,
    pub comparisons: Vec<Comparison>,
    pub timings: Vec<Timing>,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        RunReport { command: command.into(), ..Default::default() }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.parameters.push((key.to_string(), value.into()));
        self
    }

    pub fn result(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.results.push((key.to_string(), value.into()));
        self
    }

    pub fn compare(
        &mut self,
        label: impl Into<String>,
        provenance: Provenance,
        expected: impl ToString,
        computed: impl ToString,
    ) -> bool {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        let pass = expected == computed;
        self.comparisons.push(Comparison { label: label.into(), provenance, expected, computed, pass });
        pass
    }

    /// Records a check whose outcome is decided by the caller.
    pub fn check(
        &mut self,
        label: impl Into<String>,
        provenance: Provenance,
        expected: impl ToString,
        computed: impl ToString,
        pass: bool,
    ) {
        self.comparisons.push(Comparison {
            label: label.into(),
            provenance,
            expected: expected.to_string(),
            computed: computed.to_string(),
            pass,
        });
    }

    pub fn time<T>(&mut self, label: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.record_time(label, start.elapsed());
        out
    }

    pub fn record_time(&mut self, label: &str, d: Duration) {
        self.timings.push(Timing { label: label.to_string(), seconds: d.as_secs_f64() });
    }

    pub fn passed(&self) -> bool {
        self.comparisons.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        let value = |v: &Value| match v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        if !self.parameters.is_empty() {
            out.push_str("parameters:\n");
            for (k, v) in &self.parameters {
                writeln!(out, "  {k} = {}", value(v)).unwrap();
            }
        }
        if !self.results.is_empty() {
            out.push_str("results:\n");
            for (k, v) in &self.results {
                let v = value(v);
                if v.contains('\n') {
                    writeln!(out, "  {k}:").unwrap();
                    for line in v.lines() {
                        writeln!(out, "    {line}").unwrap();
                    }
                } else {
                    writeln!(out, "  {k} = {v}").unwrap();
                }
            }
        }
        if !self.comparisons.is_empty() {
            out.push_str("comparisons:\n");
            for c in &self.comparisons {
                let mark = if c.pass { "PASS" } else { "FAIL" };
                writeln!(
                    out,
                    "  [{mark}] {:<11} {}: expected {}, computed {}",
                    c.provenance, c.label, c.expected, c.computed
                )
                .unwrap();
            }
        }
        if !self.timings.is_empty() {
            out.push_str("timings:\n");
            for t in &self.timings {
                writeln!(out, "  {}: {:.3} s", t.label, t.seconds).unwrap();
            }
        }
        let n = self.comparisons.len();
        let failed = self.comparisons.iter().filter(|c| !c.pass).count();
        if n == 0 {
            writeln!(out, "status: ok (no comparisons)").unwrap();
        } else {
            let verdict = if failed == 0 { "ok" } else { "FAILED" };
            writeln!(out, "status: {verdict} ({} of {n} comparisons passed)", n - failed).unwrap();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_tracks_comparisons() {
        let mut r = RunReport::new("count");
        r.param("genus", 7).result("n", "19");
        assert!(r.compare("n_{7,2}", Provenance::Formula, 19, 19));
        assert!(r.passed());
        assert!(!r.compare("bogus", Provenance::CrossCheck, 1, 2));
        assert!(!r.passed());
        let text = r.to_text();
        assert!(text.contains("[PASS] formula     n_{7,2}: expected 19, computed 19"));
        assert!(text.contains("[FAIL] cross-check bogus"));
        assert!(text.ends_with("status: FAILED (1 of 2 comparisons passed)\n"));
    }

    #[test]
    fn json_round_trip() {
        let mut r = RunReport::new("ord");
        r.param("gens", "2,15").result("r", 3);
        r.compare("r", Provenance::CrossCheck, 3, 3);
        r.record_time("total", Duration::from_millis(5));
        let back: RunReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert!(r.to_json().contains("\"provenance\": \"cross-check\""));
    }
}
