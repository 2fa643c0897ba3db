//! Named pass/fail checks with witnesses.

use serde::Serialize;

use crate::error::Result;
use crate::exact::LinearMap;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn push(&mut self, name: impl Into<String>, passed: bool, witness: Option<String>) {
        self.checks.push(Check { name: name.into(), passed, witness });
    }

    /// Records whether `lhs == rhs`, with the first differing entry as witness.
    pub fn equation(&mut self, name: impl Into<String>, lhs: &LinearMap, rhs: &LinearMap) -> Result<()> {
        let diff = lhs.first_difference(rhs)?;
        self.push(name, diff.is_none(), diff.map(|w| w.to_string()));
        Ok(())
    }

    /// Appends another report, prefixing its check names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for c in other.checks {
            self.checks.push(Check { name: format!("{prefix}{}", c.name), ..c });
        }
    }

    /// One-line summary of the failing checks.
    pub fn summary(&self) -> String {
        let failed: Vec<String> = self
            .failures()
            .map(|c| match &c.witness {
                Some(w) => format!("{} ({w})", c.name),
                None => c.name.clone(),
            })
            .collect();
        if failed.is_empty() {
            "all checks passed".to_string()
        } else {
            format!("failed: {}", failed.join("; "))
        }
    }
}
