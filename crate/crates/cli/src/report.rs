use std::fmt::Write as _;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One verified property. `anchor` names the mathematical statement the check
/// exercises; `witness` is present on failure and holds the inputs and both
/// exact values.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub anchor: String,
    pub status: Status,
    pub witness: Option<Value>,
}

impl CheckRecord {
    pub fn new(
        name: impl Into<String>,
        anchor: &str,
        passed: bool,
        witness: impl FnOnce() -> Value,
    ) -> Self {
        CheckRecord {
            name: name.into(),
            anchor: anchor.to_string(),
            status: if passed { Status::Pass } else { Status::Fail },
            witness: (!passed).then(witness),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub config: Value,
    pub checks: Vec<CheckRecord>,
    pub data: Value,
}

impl Report {
    pub fn new(tool: &str, config: Value, mut checks: Vec<CheckRecord>, data: Value) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        Report {
            tool: tool.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            config,
            checks,
            data,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckRecord::passed)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed()).count()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// `path,value` rows, one per leaf of the JSON form.
    pub fn to_csv(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        let mut rows = Vec::new();
        flatten(&value, String::new(), &mut rows);
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["path", "value"]).expect("in-memory write");
        for (path, v) in rows {
            w.write_record([path, v]).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.tool, self.version);
        let mut config = Vec::new();
        flatten(&self.config, String::new(), &mut config);
        for (k, v) in config {
            let _ = writeln!(out, "  {k} = {v}");
        }
        let _ = writeln!(
            out,
            "checks: {} passed, {} failed",
            self.checks.len() - self.failures(),
            self.failures()
        );
        for c in &self.checks {
            let tag = if c.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "  {tag} {} ({})", c.name, c.anchor);
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "       witness: {w}");
            }
        }
        let mut data = Vec::new();
        flatten(&self.data, String::new(), &mut data);
        if !data.is_empty() {
            let _ = writeln!(out, "data:");
        }
        for (k, v) in data {
            let _ = writeln!(out, "  {k} = {v}");
        }
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
            Format::Text => self.to_text(),
        }
    }
}

fn flatten(v: &Value, path: String, out: &mut Vec<(String, String)>) {
    let join = |k: &str| {
        if path.is_empty() {
            k.to_string()
        } else {
            format!("{path}.{k}")
        }
    };
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                flatten(x, join(k), out);
            }
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                flatten(x, join(&i.to_string()), out);
            }
        }
        Value::String(s) => out.push((path, s.clone())),
        Value::Null => out.push((path, String::new())),
        other => out.push((path, other.to_string())),
    }
}

/// `{"lhs": …, "rhs": …}` plus the inputs that produced them.
pub fn pair_witness(inputs: Value, lhs: impl Serialize, rhs: impl Serialize) -> Value {
    json!({ "inputs": inputs, "lhs": lhs, "rhs": rhs })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checks_sorted_and_rendered() {
        let r = Report::new(
            "bw",
            json!({"command": "dim", "weight": 3}),
            vec![
                CheckRecord::new("b", "second", true, || Value::Null),
                CheckRecord::new("a", "first", false, || json!({"lhs": "1", "rhs": "2"})),
            ],
            json!({"dim": 4, "gram": [["1/4", "0"], ["0", "1/12"]]}),
        );
        assert_eq!(r.checks[0].name, "a");
        assert!(!r.all_passed());
        assert!(r.checks[1].witness.is_none());
        let csv = r.to_csv();
        assert!(csv.starts_with("path,value\n"));
        assert!(csv.contains("data.gram.1.1,1/12\n"));
        assert!(csv.contains("checks.0.witness.rhs,2\n"));
        let text = r.to_text();
        assert!(text.contains("FAIL a (first)"));
        assert!(text.contains("1 passed, 1 failed"));
        let parsed: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(parsed["checks"][0]["status"], "fail");
    }
}
