use std::fmt::{self, Display};

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail { counterexample: String },
    Skipped { reason: String },
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail { .. } => "fail",
            Verdict::Skipped { .. } => "skipped",
        }
    }
}

/// A named exact value. Integers and rationals are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub id: String,
    /// What was checked, e.g. `1 <= b < a <= 40`.
    pub range: String,
    #[serde(flatten)]
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
    /// Literature results taken on trust.
    pub assumed_inputs: Vec<String>,
}

impl CheckReport {
    pub fn new(id: &str, range: impl Into<String>) -> Self {
        CheckReport {
            id: id.into(),
            range: range.into(),
            verdict: Verdict::Pass,
            witnesses: vec![],
            assumed_inputs: vec![],
        }
    }

    pub fn witness(&mut self, name: impl Into<String>, value: impl Display) -> &mut Self {
        self.witnesses.push(Witness { name: name.into(), value: value.to_string() });
        self
    }

    /// Records a failure; the first counterexample is kept.
    pub fn fail(&mut self, counterexample: impl Into<String>) {
        if !matches!(self.verdict, Verdict::Fail { .. }) {
            self.verdict = Verdict::Fail { counterexample: counterexample.into() };
        }
    }

    /// `ok` or a failure described lazily.
    pub fn require(&mut self, ok: bool, counterexample: impl FnOnce() -> String) -> bool {
        if !ok {
            self.fail(counterexample());
        }
        ok
    }

    pub fn skip(&mut self, reason: impl Into<String>) {
        if self.verdict == Verdict::Pass {
            self.verdict = Verdict::Skipped { reason: reason.into() };
        }
    }

    pub fn assume(&mut self, what: impl Into<String>) {
        let w = what.into();
        if !self.assumed_inputs.contains(&w) {
            self.assumed_inputs.push(w);
        }
    }

    pub fn get(&self, name: &str) -> Option<&str> {
        self.witnesses.iter().find(|w| w.name == name).map(|w| w.value.as_str())
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failed(&self) -> bool {
        matches!(self.verdict, Verdict::Fail { .. })
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Csv,
    JsonLines,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "table" => Ok(Format::Table),
            "csv" => Ok(Format::Csv),
            "jsonl" | "json-lines" => Ok(Format::JsonLines),
            _ => Err(format!("unknown format {s:?} (table, csv, jsonl)")),
        }
    }
}

pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn detail(r: &CheckReport) -> String {
    match &r.verdict {
        Verdict::Pass => String::new(),
        Verdict::Fail { counterexample } => counterexample.clone(),
        Verdict::Skipped { reason } => reason.clone(),
    }
}

/// Renders reports; the table form ends with a pass/fail/skip tally.
pub fn render(reports: &[CheckReport], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::JsonLines => {
            for r in reports {
                out.push_str(&r.to_json_line());
                out.push('\n');
            }
        }
        Format::Csv => {
            out.push_str("id,verdict,range,detail,assumed_inputs\n");
            for r in reports {
                let row = [r.id.as_str(), r.verdict.label(), &r.range, &detail(r), &r.assumed_inputs.join("; ")];
                out.push_str(&row.iter().map(|f| csv_field(f)).collect::<Vec<_>>().join(","));
                out.push('\n');
            }
        }
        Format::Table => {
            let w = reports.iter().map(|r| r.id.len()).max().unwrap_or(2).max(5);
            out.push_str(&format!("{:<w$}  {:<7}  {}\n", "check", "verdict", "range / detail"));
            for r in reports {
                let d = detail(r);
                let tail = if d.is_empty() { r.range.clone() } else { format!("{} :: {}", r.range, d) };
                out.push_str(&format!("{:<w$}  {:<7}  {}\n", r.id, r.verdict.label(), tail));
                if !r.assumed_inputs.is_empty() {
                    out.push_str(&format!("{:<w$}  {:<7}  assumed: {}\n", "", "", r.assumed_inputs.join("; ")));
                }
            }
            let count = |l: &str| reports.iter().filter(|r| r.verdict.label() == l).count();
            out.push_str(&format!("{} pass, {} fail, {} skipped\n", count("pass"), count("fail"), count("skipped")));
        }
    }
    out
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} [{}] {}", self.id, self.verdict.label(), self.range)?;
        if let Verdict::Fail { counterexample } | Verdict::Skipped { reason: counterexample } = &self.verdict {
            writeln!(f, "  {counterexample}")?;
        }
        for w in &self.witnesses {
            writeln!(f, "  {} = {}", w.name, w.value)?;
        }
        for a in &self.assumed_inputs {
            writeln!(f, "  assumed: {a}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let mut r = CheckReport::new("x", "n = 7");
        r.witness("count", 15).witness("ratio", "1/2");
        r.fail("X2 ties");
        r.assume("order bound");
        let line = r.to_json_line();
        let back: CheckReport = serde_json::from_str(&line).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json_line(), line);
        assert!(line.contains("\"verdict\":\"fail\""));
    }

    #[test]
    fn first_failure_kept() {
        let mut r = CheckReport::new("x", "");
        r.fail("a");
        r.fail("b");
        r.skip("c");
        assert_eq!(r.verdict, Verdict::Fail { counterexample: "a".into() });
        let t = render(&[r], Format::Table);
        assert!(t.contains("0 pass, 1 fail, 0 skipped"));
    }
}
