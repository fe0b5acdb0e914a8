//! Tri-state outcomes for hypothesis-gated theorem checks.
//!
//! Every asserted implication carries its hypothesis predicate; a check on an
//! instance either finds the hypothesis unmet (vacuous), holds, or fails with
//! a witness. Suites aggregate the three states separately so vacuous truth
//! stays visible in reports.

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Outcome {
    HypothesisNotMet,
    Holds,
    Failed { witness: String },
}

impl Outcome {
    pub fn failed(witness: impl Into<String>) -> Outcome {
        Outcome::Failed { witness: witness.into() }
    }

    /// Holds when `ok`, otherwise fails with the witness produced lazily.
    pub fn require(ok: bool, witness: impl FnOnce() -> String) -> Outcome {
        if ok {
            Outcome::Holds
        } else {
            Outcome::Failed { witness: witness() }
        }
    }

    pub fn gated(hypothesis: bool, conclusion: impl FnOnce() -> Outcome) -> Outcome {
        if hypothesis {
            conclusion()
        } else {
            Outcome::HypothesisNotMet
        }
    }

    pub fn is_failure(&self) -> bool {
        matches!(self, Outcome::Failed { .. })
    }
}

/// A named check outcome on one instance.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub outcome: Outcome,
}

impl Check {
    pub fn new(name: impl Into<String>, outcome: Outcome) -> Check {
        Check { name: name.into(), outcome }
    }
}

/// Convenience for building a list of named checks.
#[derive(Debug, Default)]
pub struct CheckList {
    pub checks: Vec<Check>,
}

impl CheckList {
    pub fn new() -> CheckList {
        CheckList::default()
    }

    pub fn push(&mut self, name: impl Into<String>, outcome: Outcome) {
        self.checks.push(Check::new(name, outcome));
    }

    /// Gated check: records `HypothesisNotMet` without running the body.
    pub fn gated(&mut self, name: impl Into<String>, hypothesis: bool, body: impl FnOnce() -> Outcome) {
        self.push(name, Outcome::gated(hypothesis, body));
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.outcome.is_failure())
    }

    pub fn into_vec(self) -> Vec<Check> {
        self.checks
    }
}
