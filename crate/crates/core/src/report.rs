//! Pass/fail records produced by the verification routines.

use std::fmt;

use serde::Serialize;

use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expectation {
    /// The two sides must agree.
    Equal,
    /// The two sides are known to differ.
    Divergent,
    /// Recorded for information only.
    Info,
}

/// One compared pair of exact values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub label: String,
    pub lhs: Scalar,
    pub rhs: Scalar,
    pub expectation: Expectation,
    pub pass: bool,
}

impl Check {
    pub fn new(label: impl Into<String>, lhs: Scalar, rhs: Scalar, expectation: Expectation) -> Self {
        let pass = match expectation {
            Expectation::Equal => lhs == rhs,
            Expectation::Divergent => lhs != rhs,
            Expectation::Info => true,
        };
        Check { label: label.into(), lhs, rhs, expectation, pass }
    }

    pub fn equal(label: impl Into<String>, lhs: Scalar, rhs: Scalar) -> Self {
        Check::new(label, lhs, rhs, Expectation::Equal)
    }

    /// A boolean property, recorded as `1 = 1` or `0 = 1`.
    pub fn property(label: impl Into<String>, ok: bool) -> Self {
        Check::equal(label, Scalar::from_int(ok as i64), Scalar::one())
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = if self.lhs == self.rhs { "=" } else { "≠" };
        let status = if self.pass { "ok" } else { "FAIL" };
        write!(f, "{status}  {}: {} {rel} {}", self.label, self.lhs, self.rhs)
    }
}

/// An ordered list of checks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    /// Prefix every label of `other` before appending it.
    pub fn extend_prefixed(&mut self, prefix: &str, other: Report) {
        self.checks.extend(other.checks.into_iter().map(|mut c| {
            c.label = format!("{prefix}: {}", c.label);
            c
        }));
    }

    pub fn holds(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }
}
