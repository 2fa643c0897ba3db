//! The report every subcommand produces, and its two renderings.

use frobx_core::report::{Check, Report};
use frobx_core::{LinearMap, Rational};
use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// `passed` is always the conjunction of `checks`.
#[derive(Debug, Clone, Serialize)]
pub struct CommandReport {
    pub command: String,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub values: Map<String, Value>,
    #[serde(skip)]
    body: Vec<String>,
    #[serde(skip)]
    verdict: Option<String>,
    #[serde(skip)]
    bare: bool,
}

impl CommandReport {
    pub fn new(command: &str) -> Self {
        CommandReport {
            command: command.to_string(),
            passed: true,
            checks: Vec::new(),
            values: Map::new(),
            body: Vec::new(),
            verdict: None,
            bare: false,
        }
    }

    pub fn absorb(&mut self, prefix: &str, report: Report) {
        for c in report.checks {
            self.push(Check { name: format!("{prefix}{}", c.name), ..c });
        }
    }

    pub fn push(&mut self, check: Check) {
        self.passed &= check.passed;
        self.checks.push(check);
    }

    pub fn value(&mut self, key: &str, value: impl Into<Value>) {
        self.values.insert(key.to_string(), value.into());
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.body.push(text.into());
    }

    /// Closing line in text mode when every check passes.
    pub fn verdict(&mut self, text: &str) {
        self.verdict = Some(text.to_string());
    }

    /// Text mode prints only the body unless a check fails.
    pub fn bare(&mut self) {
        self.bare = true;
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("serializable");
                s.push('\n');
                s
            }
            Format::Text => self.render_text(),
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        for line in &self.body {
            out.push_str(line);
            out.push('\n');
        }
        if self.bare && self.passed {
            return out;
        }
        for c in &self.checks {
            match (&c.witness, c.passed) {
                (_, true) => out.push_str(&format!("  ok    {}\n", c.name)),
                (Some(w), false) => out.push_str(&format!("  FAIL  {}: {w}\n", c.name)),
                (None, false) => out.push_str(&format!("  FAIL  {}\n", c.name)),
            }
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        if failed == 0 {
            out.push_str(self.verdict.as_deref().unwrap_or("all checks passed"));
        } else {
            out.push_str(&format!("{failed} of {} checks failed", self.checks.len()));
        }
        out.push('\n');
        out
    }
}

pub fn vector_value(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

/// Rows of the matrix, rationals as strings.
pub fn matrix_value(m: &LinearMap) -> Value {
    Value::Array(m.to_rows().iter().map(|r| vector_value(r)).collect())
}

/// `v` as a combination of the named basis, e.g. `1/2 E11 + -1 E22`.
pub fn combination(names: &[String], v: &[Rational]) -> String {
    let terms: Vec<String> = names
        .iter()
        .zip(v)
        .filter(|(_, c)| !c.is_zero())
        .map(|(name, c)| if c.is_one() { name.clone() } else { format!("{c} {name}") })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

pub fn matrix_lines(m: &LinearMap) -> Vec<String> {
    m.to_rows()
        .iter()
        .map(|r| format!("  [{}]", r.iter().map(Rational::to_string).collect::<Vec<_>>().join(", ")))
        .collect()
}
