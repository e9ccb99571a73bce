//! Verification outcomes.
//!
//! A [`Report`] is a list of [`Check`]s, one per diagram or invariant, each
//! carrying the number of instances evaluated and every failing instance in
//! canonical enumeration order. Rendering is deterministic: the same input
//! yields byte-identical text and machine output.

use serde::Serialize;
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailureKind {
    /// Both sides evaluated to parallel but different morphisms.
    Mismatch,
    /// The two sides disagree on domain or codomain: a catalog bug.
    EndpointMismatch,
    /// A side could not be evaluated at this binding.
    IllTyped(String),
    /// A table invariant does not hold.
    Violation(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub binding: Vec<String>,
    pub lhs: String,
    pub rhs: String,
    pub kind: FailureKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    pub citation: String,
    pub instances: u64,
    pub failures: Vec<Failure>,
    /// Set when the check ran on a finite probe set of an infinite structure.
    pub bounded: bool,
}

impl Check {
    pub fn new(id: impl Into<String>, citation: impl Into<String>) -> Self {
        Check { id: id.into(), citation: citation.into(), instances: 0, failures: Vec::new(), bounded: false }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn fail(&mut self, binding: Vec<String>, lhs: String, rhs: String, kind: FailureKind) {
        self.failures.push(Failure { binding, lhs, rhs, kind });
    }

    /// Counts one instance, recording a violation unless `ok`.
    pub fn expect(&mut self, ok: bool, binding: impl FnOnce() -> Vec<String>, what: &str) {
        self.instances += 1;
        if !ok {
            self.fail(binding(), String::new(), String::new(), FailureKind::Violation(what.to_string()));
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

/// Reports produced by the Ann-axiom verifier use the same shape.
pub type AxiomReport = Report;

#[derive(Serialize)]
struct FailureLine<'a> {
    diagram: &'a str,
    binding: &'a [String],
    lhs: &'a str,
    rhs: &'a str,
    kind: &'a FailureKind,
    verdict: &'static str,
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    diagram: &'a str,
    citation: &'a str,
    instances: u64,
    failures: usize,
    bounded: bool,
    verdict: &'static str,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failure_count(&self) -> usize {
        self.checks.iter().map(|c| c.failures.len()).sum()
    }

    pub fn instance_count(&self) -> u64 {
        self.checks.iter().map(|c| c.instances).sum()
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// Checks whose id starts with `prefix`.
    pub fn section<'a>(&'a self, prefix: &'a str) -> impl Iterator<Item = &'a Check> + 'a {
        self.checks.iter().filter(move |c| c.id.starts_with(prefix))
    }

    pub fn first_failure(&self) -> Option<(&Check, &Failure)> {
        self.checks.iter().find_map(|c| c.failures.first().map(|f| (c, f)))
    }

    /// Prepends `prefix` to every check id.
    pub fn prefixed(mut self, prefix: &str) -> Self {
        for c in &mut self.checks {
            c.id = format!("{prefix}{}", c.id);
        }
        self
    }

    pub fn mark_bounded(&mut self) {
        for c in &mut self.checks {
            c.bounded = true;
        }
    }

    pub fn render_text(&self) -> String {
        const SHOWN: usize = 5;
        let mut out = String::new();
        for c in &self.checks {
            let verdict = if c.passed() { "PASS" } else { "FAIL" };
            let bounded = if c.bounded { " (bounded)" } else { "" };
            let _ = writeln!(
                out,
                "[{verdict}] {:<28} {:<34} {:>7} instances, {} failures{bounded}",
                c.id,
                c.citation,
                c.instances,
                c.failures.len()
            );
            for f in c.failures.iter().take(SHOWN) {
                let _ = write!(out, "    witness ({})", f.binding.join(", "));
                match &f.kind {
                    FailureKind::Mismatch => {
                        let _ = writeln!(out, ": lhs = {}, rhs = {}", f.lhs, f.rhs);
                    }
                    FailureKind::EndpointMismatch => {
                        let _ = writeln!(out, ": endpoints differ, lhs {} vs rhs {}", f.lhs, f.rhs);
                    }
                    FailureKind::IllTyped(msg) => {
                        let _ = writeln!(out, ": ill-typed instance: {msg}");
                    }
                    FailureKind::Violation(msg) => {
                        let _ = writeln!(out, ": {msg}");
                    }
                }
            }
            if c.failures.len() > SHOWN {
                let _ = writeln!(out, "    ... {} more", c.failures.len() - SHOWN);
            }
        }
        let _ = writeln!(
            out,
            "{} checks, {} instances, {} failures: {}",
            self.checks.len(),
            self.instance_count(),
            self.failure_count(),
            if self.passed() { "PASS" } else { "FAIL" }
        );
        out
    }

    /// Line-delimited JSON: one line per failing instance followed by one
    /// summary line per check.
    pub fn render_machine(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            for f in &c.failures {
                let line = FailureLine {
                    diagram: &c.id,
                    binding: &f.binding,
                    lhs: &f.lhs,
                    rhs: &f.rhs,
                    kind: &f.kind,
                    verdict: "fail",
                };
                out.push_str(&serde_json::to_string(&line).expect("serializable"));
                out.push('\n');
            }
            let line = SummaryLine {
                diagram: &c.id,
                citation: &c.citation,
                instances: c.instances,
                failures: c.failures.len(),
                bounded: c.bounded,
                verdict: if c.passed() { "pass" } else { "fail" },
            };
            out.push_str(&serde_json::to_string(&line).expect("serializable"));
            out.push('\n');
        }
        out
    }
}
