//! Verdicts produced by the identity checkers.

use std::fmt;

use crate::error::Error;
use crate::field::FieldElement;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    Pass,
    Fail,
    /// An involved quantity is undefined, or a stated ratio has a zero
    /// denominator.
    Inapplicable,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Inapplicable => "inapplicable",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub theorem: &'static str,
    pub instance: String,
    pub outcome: Outcome,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckResults {
    verdicts: Vec<Verdict>,
}

impl CheckResults {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn verdicts(&self) -> &[Verdict] {
        &self.verdicts
    }

    pub fn push(&mut self, theorem: &'static str, instance: impl Into<String>, outcome: Outcome) {
        self.verdicts.push(Verdict {
            theorem,
            instance: instance.into(),
            outcome,
        });
    }

    /// Records equality of two sides; `None` means the instance is inapplicable.
    pub fn equal(
        &mut self,
        theorem: &'static str,
        instance: impl Into<String>,
        sides: Option<(FieldElement, FieldElement)>,
    ) {
        let outcome = match sides {
            None => Outcome::Inapplicable,
            Some((l, r)) if l == r => Outcome::Pass,
            Some(_) => Outcome::Fail,
        };
        self.push(theorem, instance, outcome);
    }

    /// As [`equal`](Self::equal), for sides computed by fallible geometry;
    /// any error marks the instance inapplicable.
    pub fn equal_or_undefined(
        &mut self,
        theorem: &'static str,
        instance: impl Into<String>,
        sides: Result<(FieldElement, FieldElement), Error>,
    ) {
        self.equal(theorem, instance, sides.ok());
    }

    pub fn extend(&mut self, other: CheckResults) {
        self.verdicts.extend(other.verdicts);
    }

    pub fn count(&self, outcome: Outcome) -> usize {
        self.verdicts.iter().filter(|v| v.outcome == outcome).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| v.outcome == Outcome::Fail)
    }

    pub fn has_failure(&self) -> bool {
        self.failures().next().is_some()
    }

    pub fn for_theorem<'a>(&'a self, theorem: &'a str) -> impl Iterator<Item = &'a Verdict> + 'a {
        self.verdicts.iter().filter(move |v| v.theorem == theorem)
    }

    pub fn find(&self, theorem: &str, instance: &str) -> Option<&Verdict> {
        self.verdicts
            .iter()
            .find(|v| v.theorem == theorem && v.instance == instance)
    }
}

/// `a / b`, or `None` when `b` vanishes.
pub fn ratio(a: &FieldElement, b: &FieldElement) -> Option<FieldElement> {
    a.checked_div(b).ok()
}
