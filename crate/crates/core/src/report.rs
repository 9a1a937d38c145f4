//! Verification reports shared by certificates, scans and randomized suites.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

/// One checked claim: what was expected, what was computed, and whether they agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

/// An ordered list of informational fields and checks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub fields: Vec<(String, String)>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), ..Default::default() }
    }

    pub fn field(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.fields.push((key.into(), value.to_string()));
        self
    }

    /// Records a check that passes when `expected == computed`.
    pub fn check_eq(&mut self, name: impl Into<String>, expected: impl ToString, computed: impl ToString) -> bool {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        let pass = expected == computed;
        self.checks.push(Check { name: name.into(), expected, computed, pass });
        pass
    }

    /// Records a check whose verdict is decided by the caller.
    pub fn check(&mut self, name: impl Into<String>, expected: impl ToString, computed: impl ToString, pass: bool) -> bool {
        self.checks.push(Check { name: name.into(), expected: expected.to_string(), computed: computed.to_string(), pass });
        pass
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }

    /// Appends another report's fields and checks, prefixing names with `prefix.`.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for (k, v) in other.fields {
            self.fields.push((alloc::format!("{prefix}.{k}"), v));
        }
        for mut c in other.checks {
            c.name = alloc::format!("{prefix}.{}", c.name);
            self.checks.push(c);
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "report: {}", self.title)?;
        for (k, v) in &self.fields {
            writeln!(f, "  {k}: {v}")?;
        }
        for c in &self.checks {
            let verdict = if c.pass { "PASS" } else { "FAIL" };
            writeln!(f, "  [{verdict}] {}: expected {}, computed {}", c.name, c.expected, c.computed)?;
        }
        let overall = if self.all_pass() { "PASS" } else { "FAIL" };
        writeln!(f, "result: {overall} ({}/{})", self.passed(), self.checks.len())
    }
}
