use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

/// One verified statement with the data that supports or refutes it.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// What the check is about, in words.
    pub anchor: String,
    pub status: Status,
    pub witness: Value,
}

impl Check {
    pub fn new(name: impl Into<String>, anchor: impl Into<String>, status: Status, witness: Value) -> Self {
        Self {
            name: name.into(),
            anchor: anchor.into(),
            status,
            witness,
        }
    }

    pub fn verdict(name: impl Into<String>, anchor: impl Into<String>, ok: bool, witness: Value) -> Self {
        Self::new(name, anchor, if ok { Status::Pass } else { Status::Fail }, witness)
    }

    pub fn skip(name: impl Into<String>, anchor: impl Into<String>, reason: impl Into<String>) -> Self {
        Self::new(name, anchor, Status::Skip, Value::String(reason.into()))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

#[derive(Clone, PartialEq, Debug, Default, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl Report {
    pub fn from_checks(checks: Vec<Check>) -> Self {
        let mut r = Self {
            checks,
            summary: Summary::default(),
        };
        r.recount();
        r
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
        self.recount();
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
        self.recount();
    }

    fn recount(&mut self) {
        let count = |s| self.checks.iter().filter(|c| c.status == s).count();
        self.summary = Summary {
            pass: count(Status::Pass),
            fail: count(Status::Fail),
            skip: count(Status::Skip),
        };
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    /// `0` when nothing failed, `1` otherwise.
    pub fn exit_code(&self) -> u8 {
        u8::from(!self.passed())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// One line per check followed by the totals.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let witness = match &c.witness {
                Value::Null => String::new(),
                Value::String(s) => format!(": {s}"),
                v => format!(": {v}"),
            };
            out.push_str(&format!("[{}] {} ({}){}\n", c.status, c.name, c.anchor, witness));
        }
        out.push_str(&format!(
            "{} passed, {} failed, {} skipped\n",
            self.summary.pass, self.summary.fail, self.summary.skip
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn summary_and_exit_code() {
        let mut r = Report::default();
        r.push(Check::verdict("a", "x", true, json!(1)));
        r.push(Check::skip("b", "x", "guard"));
        assert_eq!(r.exit_code(), 0);
        r.push(Check::verdict("c", "x", false, json!({"lhs": "1"})));
        assert_eq!(r.summary, Summary { pass: 1, fail: 1, skip: 1 });
        assert_eq!(r.exit_code(), 1);
    }

    #[test]
    fn json_round_trip() {
        let r = Report::from_checks(vec![
            Check::verdict("a", "x", true, json!({"value": "-1", "list": ["1/2", "3"]})),
            Check::skip("b", "y", "exempt"),
        ]);
        let s = r.to_json();
        let back = Report::from_json(&s).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json(), s);
        assert!(s.contains("\"status\": \"skip\""));
    }

    #[test]
    fn text_rendering() {
        let r = Report::from_checks(vec![Check::verdict("a", "thing", true, json!("ok"))]);
        assert_eq!(r.render_text(), "[PASS] a (thing): ok\n1 passed, 0 failed, 0 skipped\n");
    }
}
