//! Human-readable and JSON reports for a single structure.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::classify::{classify, Checked, ClassificationReport, Implication};
use crate::decomposition::{decompose, least_csc, Decomposition};
use crate::elements::{element_regularity, inverses_of, ordered_idempotents, ElementRegularity};
use crate::error::Result;
use crate::structure::{OrderedSemigroup, StructureSummary};
use crate::verdict::{BundleResult, Verdict};

#[derive(Debug, Clone, Serialize)]
pub struct BundleEntry {
    pub id: String,
    pub applicable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<BundleResult>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ElementWitnesses {
    pub element: usize,
    pub ordered_idempotent: bool,
    /// Least witnesses for the four regularity conditions.
    pub regularity: ElementRegularity,
    pub inverses: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Witnesses {
    pub ordered_idempotents: Vec<usize>,
    pub elements: Vec<ElementWitnesses>,
    pub implications: Vec<Implication>,
}

/// Everything `classify` prints. Field order is the JSON field order.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub structure: StructureSummary,
    pub predicates: BTreeMap<String, Checked<Verdict>>,
    pub bundles: Vec<BundleEntry>,
    /// By the least complete semilattice congruence.
    pub decomposition: Option<Decomposition>,
    pub witnesses: Witnesses,
}

impl Report {
    pub fn build(s: &OrderedSemigroup) -> Result<Report> {
        let ClassificationReport {
            predicates,
            bundles,
            implications,
            ..
        } = classify(s)?;
        let idempotents = ordered_idempotents(s);
        Ok(Report {
            structure: StructureSummary::from(s),
            predicates,
            bundles: bundles
                .into_iter()
                .map(|(id, checked)| match checked {
                    Checked::Evaluated(r) => BundleEntry {
                        id,
                        applicable: true,
                        result: Some(r),
                    },
                    Checked::NotApplicable => BundleEntry {
                        id,
                        applicable: false,
                        result: None,
                    },
                })
                .collect(),
            decomposition: decompose(s, &least_csc(s)).ok(),
            witnesses: Witnesses {
                ordered_idempotents: idempotents.to_vec(),
                elements: s
                    .elements()
                    .map(|a| ElementWitnesses {
                        element: a,
                        ordered_idempotent: idempotents.contains(a),
                        regularity: element_regularity(s, a),
                        inverses: inverses_of(s, a).to_vec(),
                    })
                    .collect(),
                implications,
            },
        })
    }

    /// Every applicable bundle agrees.
    pub fn all_agree(&self) -> bool {
        self.bundles
            .iter()
            .all(|b| b.result.as_ref().is_none_or(|r| r.agree))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let s = &self.structure;
        let _ = writeln!(out, "ordered semigroup with {} elements", s.size);
        if let Some(names) = &s.names {
            let _ = writeln!(out, "names: {}", names.join(" "));
        }
        out.push_str("table:\n");
        for row in &s.table {
            let cells: Vec<String> = row.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "  {}", cells.join(" "));
        }
        let _ = writeln!(out, "order: {}", pairs_text(&s.order, "<"));
        let _ = writeln!(
            out,
            "ordered idempotents: {}",
            list_text(&self.witnesses.ordered_idempotents)
        );

        out.push_str("\npredicates\n");
        for (name, checked) in &self.predicates {
            let _ = writeln!(out, "  {name:<20} {}", checked_text(checked));
        }

        out.push_str("\ntheorem checks\n");
        for b in &self.bundles {
            let _ = writeln!(out, "  {:<14} {}", b.id, bundle_text(b));
        }

        out.push_str("\ndecomposition by the least complete semilattice congruence\n");
        match &self.decomposition {
            Some(d) => {
                let classes: Vec<String> = d
                    .classes
                    .iter()
                    .map(|c| format!("{{{}}}", join(c, ",")))
                    .collect();
                let _ = writeln!(out, "  classes: {}", classes.join(" "));
                let _ = writeln!(
                    out,
                    "  semilattice order: {}",
                    pairs_text(&d.quotient_order, "<")
                );
                let _ = writeln!(
                    out,
                    "  decomposition conditions: {}",
                    if d.conditions_hold() {
                        "all hold"
                    } else {
                        "violated"
                    }
                );
                for (i, t) in d.class_types.iter().enumerate() {
                    let kinds: Vec<&str> = [
                        "completely_simple",
                        "group_like",
                        "left_group_like",
                        "right_group_like",
                    ]
                    .into_iter()
                    .filter(|p| t.is(p))
                    .collect();
                    let kinds = if kinds.is_empty() {
                        "-".to_string()
                    } else {
                        kinds.join(", ")
                    };
                    let _ = writeln!(out, "  class {i}: {kinds}");
                }
            }
            None => out.push_str("  unavailable\n"),
        }

        out.push_str("\nelements\n");
        for e in &self.witnesses.elements {
            let r = &e.regularity;
            let _ = writeln!(
                out,
                "  {}: regular {} completely regular {} left regular {} right regular {} inverses {}",
                e.element,
                opt_text(r.regular),
                opt_text(r.completely_regular),
                opt_text(r.left_regular),
                opt_text(r.right_regular),
                list_text(&e.inverses),
            );
        }
        out
    }
}

fn join(v: &[usize], sep: &str) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(sep)
}

fn list_text(v: &[usize]) -> String {
    format!("{{{}}}", join(v, ","))
}

fn pairs_text(pairs: &[(usize, usize)], rel: &str) -> String {
    if pairs.is_empty() {
        return "discrete".to_string();
    }
    pairs
        .iter()
        .map(|(a, b)| format!("{a}{rel}{b}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn opt_text(w: Option<usize>) -> String {
    w.map_or_else(|| "no".to_string(), |x| format!("x={x}"))
}

fn verdict_text(v: &Verdict) -> String {
    let head = if v.holds { "yes" } else { "no" };
    match &v.witness {
        Some(w) if v.holds => format!("{head} (witness {})", join(w, " ")),
        Some(w) => format!("{head} (counterexample {})", join(w, " ")),
        None => head.to_string(),
    }
}

fn checked_text(c: &Checked<Verdict>) -> String {
    match c {
        Checked::Evaluated(v) => verdict_text(v),
        Checked::NotApplicable => "n/a (not regular)".to_string(),
    }
}

fn bundle_text(b: &BundleEntry) -> String {
    let Some(r) = &b.result else {
        return "n/a (premise fails)".to_string();
    };
    let values: Vec<&str> = r
        .conditions
        .iter()
        .map(|c| if c.verdict.holds { "T" } else { "F" })
        .collect();
    let mut text = format!(
        "{} [{}]",
        if r.agree { "agree" } else { "DISAGREE" },
        values.join("")
    );
    if !r.skipped.is_empty() {
        let _ = write!(text, " skipped: {}", r.skipped.join(", "));
    }
    text
}

/// Lines describing every failing condition of a disagreeing bundle.
pub fn disagreement_text(r: &BundleResult) -> String {
    let mut out = format!("{} disagrees\n", r.id);
    for c in &r.conditions {
        let _ = writeln!(
            out,
            "  [{}] {}: {}",
            c.group,
            c.label,
            verdict_text(&c.verdict)
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    #[test]
    fn json_has_the_documented_fields() {
        let r = Report::build(&sl2()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(
            keys,
            [
                "bundles",
                "decomposition",
                "predicates",
                "structure",
                "witnesses"
            ]
        );
        assert_eq!(v["predicates"]["group_like"]["holds"], false);
        assert_eq!(
            v["predicates"]["group_like"]["witness"],
            serde_json::json!([1, 0])
        );
        assert_eq!(v["structure"]["order"], serde_json::json!([[0, 1]]));
    }

    #[test]
    fn text_report_is_deterministic() {
        let a = Report::build(&pz2()).unwrap().render_text();
        let b = Report::build(&pz2()).unwrap().render_text();
        assert_eq!(a, b);
        assert!(a.contains("ordered semigroup with 3 elements"));
        assert!(a.contains("order: 0<2 1<2"));
    }

    #[test]
    fn fixtures_agree() {
        for (name, s) in all() {
            assert!(Report::build(&s).unwrap().all_agree(), "{name}");
        }
    }
}
