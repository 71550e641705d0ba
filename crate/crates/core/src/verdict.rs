//! Truth values with witnesses, and the result type of theorem checks.

use serde::Serialize;

/// A decided statement together with the evidence found for it.
///
/// For a statement of the form "for all ... there exists ...", a failing
/// verdict carries the lexicographically least counterexample tuple; a
/// passing existential carries its least witness tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

impl Verdict {
    pub fn yes() -> Self {
        Verdict {
            holds: true,
            witness: None,
        }
    }

    pub fn no() -> Self {
        Verdict {
            holds: false,
            witness: None,
        }
    }

    pub fn holds_with(witness: Vec<usize>) -> Self {
        Verdict {
            holds: true,
            witness: Some(witness),
        }
    }

    pub fn fails_at(counterexample: Vec<usize>) -> Self {
        Verdict {
            holds: false,
            witness: Some(counterexample),
        }
    }

    /// `Verdict` for "no counterexample exists".
    pub fn from_counterexample(cex: Option<Vec<usize>>) -> Self {
        match cex {
            None => Verdict::yes(),
            Some(c) => Verdict::fails_at(c),
        }
    }

    pub fn from_bool(holds: bool) -> Self {
        Verdict {
            holds,
            witness: None,
        }
    }

    /// Conjunction; the first failing side supplies the counterexample.
    pub fn and(self, other: impl FnOnce() -> Verdict) -> Verdict {
        if self.holds {
            let other = other();
            if other.holds {
                Verdict::yes()
            } else {
                other
            }
        } else {
            self
        }
    }
}

/// How the conditions of a bundle are expected to relate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BundleKind {
    /// Each group of conditions is a list of mutually equivalent statements.
    Equivalence,
    /// Every condition is an identity expected to hold outright.
    Identities,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub label: String,
    /// Conditions in the same group are claimed equivalent.
    pub group: usize,
    pub verdict: Verdict,
}

/// Outcome of one theorem check on one structure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BundleResult {
    pub id: String,
    pub kind: BundleKind,
    pub conditions: Vec<Condition>,
    /// Equivalence: within every group all verdicts coincide.
    /// Identities: every verdict holds.
    pub agree: bool,
    /// Conditions left out because the carrier exceeds a scan limit.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub skipped: Vec<String>,
}

impl BundleResult {
    pub fn new(id: &str, kind: BundleKind, conditions: Vec<Condition>) -> Self {
        Self::with_skipped(id, kind, conditions, Vec::new())
    }

    pub fn with_skipped(
        id: &str,
        kind: BundleKind,
        conditions: Vec<Condition>,
        skipped: Vec<String>,
    ) -> Self {
        let agree = match kind {
            BundleKind::Identities => conditions.iter().all(|c| c.verdict.holds),
            BundleKind::Equivalence => conditions.iter().all(|c| {
                conditions
                    .iter()
                    .filter(|d| d.group == c.group)
                    .all(|d| d.verdict.holds == c.verdict.holds)
            }),
        };
        BundleResult {
            id: id.to_string(),
            kind,
            conditions,
            agree,
            skipped,
        }
    }

    /// The common truth value of the first group, when it agrees.
    pub fn value(&self) -> Option<bool> {
        let first = self.conditions.first()?;
        self.conditions
            .iter()
            .filter(|c| c.group == first.group)
            .all(|c| c.verdict.holds == first.verdict.holds)
            .then_some(first.verdict.holds)
    }
}

/// Shorthand for building condition lists.
pub(crate) fn cond(label: &str, group: usize, verdict: Verdict) -> Condition {
    Condition {
        label: label.to_string(),
        group,
        verdict,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn agreement_is_per_group() {
        let r = BundleResult::new(
            "X",
            BundleKind::Equivalence,
            vec![
                cond("a", 0, Verdict::yes()),
                cond("b", 0, Verdict::yes()),
                cond("c", 1, Verdict::no()),
                cond("d", 1, Verdict::no()),
            ],
        );
        assert!(r.agree);
        assert_eq!(r.value(), Some(true));
        let r = BundleResult::new(
            "X",
            BundleKind::Equivalence,
            vec![cond("a", 0, Verdict::yes()), cond("b", 0, Verdict::no())],
        );
        assert!(!r.agree);
        let r = BundleResult::new(
            "Y",
            BundleKind::Identities,
            vec![cond("a", 0, Verdict::no()), cond("b", 0, Verdict::no())],
        );
        assert!(!r.agree);
    }

    #[test]
    fn conjunction_keeps_first_counterexample() {
        let v = Verdict::fails_at(vec![1]).and(|| Verdict::fails_at(vec![0]));
        assert_eq!(v.witness, Some(vec![1]));
        let v = Verdict::holds_with(vec![3]).and(|| Verdict::fails_at(vec![0]));
        assert_eq!(v.witness, Some(vec![0]));
    }
}
