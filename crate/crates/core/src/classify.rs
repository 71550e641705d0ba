//! Structure-level predicates and the equivalence bundles.
//!
//! Each bundle evaluates every one of its conditions directly from the
//! definitions involved; no condition is derived from another, so a bundle
//! whose `agree` flag is `false` is a genuine counterexample to the
//! corresponding characterization.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::decomposition::{structure_theorem_check, THEOREMS};
use crate::elements::{
    completely_regular_witness, is_inverse_of, ordered_idempotents, regular_witness,
};
use crate::error::{Error, Result};
use crate::ideals::{green_relation, principal_ideal, Green, Side};
use crate::limits::limits;
use crate::set::ElementSet;
use crate::structure::OrderedSemigroup;
use crate::verdict::{cond, BundleKind, BundleResult, Verdict};

/// Registered predicate identifiers.
pub const PREDICATES: [&str; 15] = [
    "regular",
    "completely_regular",
    "group_like",
    "left_group_like",
    "right_group_like",
    "simple",
    "left_simple",
    "right_simple",
    "t_simple",
    "completely_simple",
    "clifford",
    "left_clifford",
    "right_clifford",
    "inverse",
    "h_commutative",
];

/// Registered equivalence-bundle identifiers.
pub const BUNDLES: [&str; 13] = [
    "CR-EQ5",
    "GL-CHAR",
    "GL-HREL",
    "INV-COMM",
    "CR-HCOMM",
    "CR-INV",
    "CR-HCLASS",
    "CL-EQ",
    "CL-HCOMM",
    "CL-CRESEF",
    "CL-CRINV",
    "LCL-EQ5",
    "LCL-EQ2",
];

// ---------------------------------------------------------------------------
// quantifier helpers

fn forall1(s: &OrderedSemigroup, p: impl Fn(usize) -> bool) -> Verdict {
    Verdict::from_counterexample(s.elements().find(|&a| !p(a)).map(|a| vec![a]))
}

fn forall2(s: &OrderedSemigroup, p: impl Fn(usize, usize) -> bool) -> Verdict {
    for a in s.elements() {
        for b in s.elements() {
            if !p(a, b) {
                return Verdict::fails_at(vec![a, b]);
            }
        }
    }
    Verdict::yes()
}

fn forall_in2(set: &ElementSet, p: impl Fn(usize, usize) -> bool) -> Verdict {
    for a in set.iter() {
        for b in set.iter() {
            if !p(a, b) {
                return Verdict::fails_at(vec![a, b]);
            }
        }
    }
    Verdict::yes()
}

/// `a <= f(x)` for some `x`.
fn below(s: &OrderedSemigroup, a: usize, f: impl Fn(usize) -> usize) -> bool {
    s.elements().any(|x| s.leq(a, f(x)))
}

// ---------------------------------------------------------------------------
// predicates from their definitions

pub(crate) fn regular(s: &OrderedSemigroup) -> Verdict {
    forall1(s, |a| regular_witness(s, a).is_some())
}

pub(crate) fn completely_regular(s: &OrderedSemigroup) -> Verdict {
    forall1(s, |a| completely_regular_witness(s, a).is_some())
}

/// For all `a, b` there are `x, y` with `a <= xb` and `a <= by`.
pub(crate) fn group_like(s: &OrderedSemigroup) -> Verdict {
    forall2(s, |a, b| {
        below(s, a, |x| s.mul(x, b)) && below(s, a, |y| s.mul(b, y))
    })
}

/// For all `a, b` there is `x` with `a <= xb` (the regularity premise excluded).
fn left_division(s: &OrderedSemigroup) -> Verdict {
    forall2(s, |a, b| below(s, a, |x| s.mul(x, b)))
}

/// Regular and left divisible: the full left-group-like condition.
pub(crate) fn left_group_like(s: &OrderedSemigroup) -> Verdict {
    regular(s).and(|| left_division(s))
}

pub(crate) fn right_group_like(s: &OrderedSemigroup) -> Verdict {
    left_group_like(&s.dual())
}

/// No proper ideal of the side: every principal ideal is the whole carrier.
fn side_simple(s: &OrderedSemigroup, side: Side) -> Verdict {
    for a in s.elements() {
        let ideal = principal_ideal(s, a, side);
        if let Some(t) = s.elements().find(|&t| !ideal.contains(t)) {
            return Verdict::fails_at(vec![a, t]);
        }
    }
    Verdict::yes()
}

pub(crate) fn simple(s: &OrderedSemigroup) -> Verdict {
    side_simple(s, Side::TwoSided)
}

pub(crate) fn left_simple(s: &OrderedSemigroup) -> Verdict {
    side_simple(s, Side::Left)
}

pub(crate) fn right_simple(s: &OrderedSemigroup) -> Verdict {
    side_simple(s, Side::Right)
}

pub(crate) fn t_simple(s: &OrderedSemigroup) -> Verdict {
    left_simple(s).and(|| right_simple(s))
}

pub(crate) fn completely_simple(s: &OrderedSemigroup) -> Verdict {
    simple(s).and(|| completely_regular(s))
}

/// For all `a` and `e ∈ E≤(S)` there are `u, v` with `ae <= eua` and `ea <= ave`
/// (the regularity premise excluded).
fn clifford_condition(s: &OrderedSemigroup) -> Verdict {
    let idem = ordered_idempotents(s);
    for a in s.elements() {
        for e in idem.iter() {
            let ae = s.mul(a, e);
            let ea = s.mul(e, a);
            let ok =
                below(s, ae, |u| s.mul(s.mul(e, u), a)) && below(s, ea, |v| s.mul(s.mul(a, v), e));
            if !ok {
                return Verdict::fails_at(vec![a, e]);
            }
        }
    }
    Verdict::yes()
}

pub(crate) fn clifford(s: &OrderedSemigroup) -> Verdict {
    regular(s).and(|| clifford_condition(s))
}

/// `(aS] ⊆ (Sa]` for all `a`: every `t <= as` is also below some `xa`.
fn left_clifford_condition(s: &OrderedSemigroup) -> Verdict {
    for a in s.elements() {
        for t in s.elements() {
            if below(s, t, |x| s.mul(a, x)) && !below(s, t, |x| s.mul(x, a)) {
                return Verdict::fails_at(vec![a, t]);
            }
        }
    }
    Verdict::yes()
}

pub(crate) fn left_clifford(s: &OrderedSemigroup) -> Verdict {
    regular(s).and(|| left_clifford_condition(s))
}

pub(crate) fn right_clifford(s: &OrderedSemigroup) -> Verdict {
    left_clifford(&s.dual())
}

/// Any two ordered inverses of one element are H-related
/// (the regularity premise excluded).
fn inverse_condition(s: &OrderedSemigroup) -> Verdict {
    let h = green_relation(s, Green::H);
    for a in s.elements() {
        for b in s.elements() {
            if !is_inverse_of(s, b, a) {
                continue;
            }
            for c in s.elements() {
                if is_inverse_of(s, c, a) && !h.related(b, c) {
                    return Verdict::fails_at(vec![a, b, c]);
                }
            }
        }
    }
    Verdict::yes()
}

pub(crate) fn inverse(s: &OrderedSemigroup) -> Verdict {
    regular(s).and(|| inverse_condition(s))
}

/// For all `a, b` some `x` gives `ab <= bxa`.
pub(crate) fn h_commutative(s: &OrderedSemigroup) -> Verdict {
    forall2(s, |a, b| below(s, s.mul(a, b), |x| s.mul(s.mul(b, x), a)))
}

fn requires_regular(name: &str) -> bool {
    matches!(
        name,
        "left_group_like"
            | "right_group_like"
            | "clifford"
            | "left_clifford"
            | "right_clifford"
            | "inverse"
    )
}

/// Evaluates a registered predicate.
///
/// Predicates whose definition presupposes a regular structure return
/// `NotApplicable` on non-regular input instead of `false`.
pub fn predicate(s: &OrderedSemigroup, name: &str) -> Result<Verdict> {
    if !PREDICATES.contains(&name) {
        return Err(Error::UnknownPredicate(name.to_string()));
    }
    if requires_regular(name) && !regular(s).holds {
        return Err(Error::NotApplicable(name.to_string()));
    }
    Ok(strict_predicate(s, name))
}

/// Evaluates a predicate with regularity folded in as a conjunct.
pub(crate) fn strict_predicate(s: &OrderedSemigroup, name: &str) -> Verdict {
    match name {
        "regular" => regular(s),
        "completely_regular" => completely_regular(s),
        "group_like" => group_like(s),
        "left_group_like" => left_group_like(s),
        "right_group_like" => right_group_like(s),
        "simple" => simple(s),
        "left_simple" => left_simple(s),
        "right_simple" => right_simple(s),
        "t_simple" => t_simple(s),
        "completely_simple" => completely_simple(s),
        "clifford" => clifford(s),
        "left_clifford" => left_clifford(s),
        "right_clifford" => right_clifford(s),
        "inverse" => inverse(s),
        "h_commutative" => h_commutative(s),
        other => unreachable!("unregistered predicate {other}"),
    }
}

// ---------------------------------------------------------------------------
// bundles

fn premise(id: &str, holds: bool) -> Result<()> {
    if holds {
        Ok(())
    } else {
        Err(Error::NotApplicable(id.to_string()))
    }
}

/// Every H-class is product closed and group like as an ordered semigroup.
pub(crate) fn h_classes_group_like(s: &OrderedSemigroup) -> Verdict {
    let h = green_relation(s, Green::H);
    for class in h.classes() {
        match s.induced_substructure(class) {
            Err(_) => return Verdict::fails_at(class.to_vec()),
            Ok(sub) => {
                if !group_like(&sub.structure).holds {
                    return Verdict::fails_at(class.to_vec());
                }
            }
        }
    }
    Verdict::yes()
}

/// Least subsemigroup (in mask order) containing `a` that satisfies `good`.
fn covering_subsemigroup(
    s: &OrderedSemigroup,
    a: usize,
    good: impl Fn(&OrderedSemigroup) -> bool,
) -> Option<ElementSet> {
    let n = s.size();
    (1u64..(1u64 << n))
        .filter(|mask| mask >> a & 1 == 1)
        .map(|mask| ElementSet::from_members(n, (0..n).filter(|i| mask >> i & 1 == 1)))
        .find(|t| {
            s.closure_violation(t).is_none()
                && good(&s.induced_substructure(t).expect("closed").structure)
        })
}

/// `S` is a union of group-like ordered subsemigroups. `None` when the carrier
/// is too large for the subset scan.
pub(crate) fn union_of_group_like(s: &OrderedSemigroup) -> Option<Verdict> {
    if s.size() > limits().ideals {
        return None;
    }
    Some(forall1(s, |a| {
        covering_subsemigroup(s, a, |t| group_like(t).holds).is_some()
    }))
}

fn cr_eq5(s: &OrderedSemigroup) -> BundleResult {
    let sq = |a: usize| s.mul(a, a);
    let in_a2sa = |a: usize| below(s, a, |x| s.mul(s.mul(sq(a), x), a));
    let in_asa2 = |a: usize| below(s, a, |x| s.mul(s.mul(a, x), sq(a)));
    let in_sa2 = |a: usize| below(s, a, |x| s.mul(x, sq(a)));
    let in_a2s = |a: usize| below(s, a, |x| s.mul(sq(a), x));
    BundleResult::new(
        "CR-EQ5",
        BundleKind::Equivalence,
        vec![
            cond("S is completely regular", 0, completely_regular(s)),
            cond(
                "a ∈ (a²Sa] ∩ (aSa²] for all a",
                0,
                forall1(s, |a| in_a2sa(a) && in_asa2(a)),
            ),
            cond(
                "a ∈ (a²Sa] ∩ (Sa²] for all a",
                0,
                forall1(s, |a| in_a2sa(a) && in_sa2(a)),
            ),
            cond(
                "a ∈ (aSa²] ∩ (a²S] for all a",
                0,
                forall1(s, |a| in_asa2(a) && in_a2s(a)),
            ),
            cond(
                "S is regular and a ∈ (a²S] ∩ (Sa²] for all a",
                0,
                regular(s).and(|| forall1(s, |a| in_a2s(a) && in_sa2(a))),
            ),
        ],
    )
}

fn gl_char(s: &OrderedSemigroup) -> BundleResult {
    BundleResult::new(
        "GL-CHAR",
        BundleKind::Equivalence,
        vec![
            cond("S is group like", 0, group_like(s)),
            cond(
                "a ∈ (bSb] for all a, b",
                0,
                forall2(s, |a, b| below(s, a, |x| s.mul(s.mul(b, x), b))),
            ),
            cond("S is left group like", 1, left_group_like(s)),
            cond(
                "a ∈ (aSb] for all a, b",
                1,
                forall2(s, |a, b| below(s, a, |x| s.mul(s.mul(a, x), b))),
            ),
        ],
    )
}

fn forall_idempotent_pairs(s: &OrderedSemigroup, p: impl Fn(usize, usize) -> bool) -> Verdict {
    forall_in2(&ordered_idempotents(s), p)
}

fn gl_hrel(s: &OrderedSemigroup) -> Result<BundleResult> {
    premise("GL-HREL", regular(s).holds)?;
    let h = green_relation(s, Green::H);
    Ok(BundleResult::new(
        "GL-HREL",
        BundleKind::Equivalence,
        vec![
            cond("S is group like", 0, group_like(s)),
            cond(
                "e H f for all e, f ∈ E≤(S)",
                0,
                forall_idempotent_pairs(s, |e, f| h.related(e, f)),
            ),
        ],
    ))
}

fn inv_comm(s: &OrderedSemigroup) -> Result<BundleResult> {
    premise("INV-COMM", regular(s).holds)?;
    Ok(BundleResult::new(
        "INV-COMM",
        BundleKind::Equivalence,
        vec![
            cond(
                "a' H a'' for all a and a', a'' ∈ V≤(a)",
                0,
                inverse_condition(s),
            ),
            cond(
                "for all e, f ∈ E≤(S) some x gives ef <= fxe",
                0,
                forall_idempotent_pairs(s, |e, f| below(s, s.mul(e, f), |x| s.mul(s.mul(f, x), e))),
            ),
        ],
    ))
}

fn cr_hcomm(s: &OrderedSemigroup) -> Result<BundleResult> {
    premise("CR-HCOMM", h_commutative(s).holds)?;
    Ok(BundleResult::new(
        "CR-HCOMM",
        BundleKind::Equivalence,
        vec![
            cond("S is regular", 0, regular(s)),
            cond("S is completely regular", 0, completely_regular(s)),
        ],
    ))
}

fn cr_inv(s: &OrderedSemigroup) -> BundleResult {
    let inverse_commutes = forall1(s, |a| {
        s.elements().any(|b| {
            if !is_inverse_of(s, b, a) {
                return false;
            }
            let ab = s.mul(a, b);
            let ba = s.mul(b, a);
            below(s, ab, |u| s.mul(s.mul(b, u), a)) && below(s, ba, |v| s.mul(s.mul(a, v), b))
        })
    });
    BundleResult::new(
        "CR-INV",
        BundleKind::Equivalence,
        vec![
            cond("S is completely regular", 0, completely_regular(s)),
            cond(
                "every a has a' ∈ V≤(a) with aa' <= a'ua and a'a <= ava'",
                0,
                inverse_commutes,
            ),
        ],
    )
}

fn cr_hclass(s: &OrderedSemigroup) -> BundleResult {
    let mut conditions = vec![
        cond("S is completely regular", 0, completely_regular(s)),
        cond(
            "each H-class is a group like ordered semigroup",
            0,
            h_classes_group_like(s),
        ),
    ];
    let mut skipped = Vec::new();
    match union_of_group_like(s) {
        Some(v) => conditions.push(cond("S is a union of group like ordered semigroups", 0, v)),
        None => skipped.push("S is a union of group like ordered semigroups".to_string()),
    }
    BundleResult::with_skipped("CR-HCLASS", BundleKind::Equivalence, conditions, skipped)
}

/// Least `(a, t)` with `t` in `lhs(a)` but not in `rhs(a)`.
fn set_inclusion(
    elems: &ElementSet,
    lhs: impl Fn(usize) -> ElementSet,
    rhs: impl Fn(usize) -> ElementSet,
) -> Verdict {
    for a in elems.iter() {
        if let Some(t) = lhs(a).first_outside(&rhs(a)) {
            return Verdict::fails_at(vec![a, t]);
        }
    }
    Verdict::yes()
}

/// `(aS]`
fn right_translate(s: &OrderedSemigroup, a: usize) -> ElementSet {
    s.down_closure(&ElementSet::from_members(
        s.size(),
        s.elements().map(|x| s.mul(a, x)),
    ))
}

/// `(Sa]`
fn left_translate(s: &OrderedSemigroup, a: usize) -> ElementSet {
    s.down_closure(&ElementSet::from_members(
        s.size(),
        s.elements().map(|x| s.mul(x, a)),
    ))
}

fn relation_equal(s: &OrderedSemigroup, first: Green, second: Green) -> Verdict {
    let r1 = green_relation(s, first);
    let r2 = green_relation(s, second);
    Verdict::from_counterexample(
        r1.first_pair_outside(&r2)
            .or_else(|| r2.first_pair_outside(&r1))
            .map(|(a, b)| vec![a, b]),
    )
}

fn cl_eq(s: &OrderedSemigroup) -> Result<BundleResult> {
    premise("CL-EQ", regular(s).holds)?;
    let all = s.carrier();
    let idem = ordered_idempotents(s);
    let both_ways = |elems: &ElementSet| {
        set_inclusion(elems, |a| right_translate(s, a), |a| left_translate(s, a))
            .and(|| set_inclusion(elems, |a| left_translate(s, a), |a| right_translate(s, a)))
    };
    Ok(BundleResult::new(
        "CL-EQ",
        BundleKind::Equivalence,
        vec![
            cond("S is Clifford", 0, clifford_condition(s)),
            cond("L = R", 0, relation_equal(s, Green::L, Green::R)),
            cond("(aS] = (Sa] for all a", 0, both_ways(&all)),
            cond("(eS] = (Se] for all e ∈ E≤(S)", 0, both_ways(&idem)),
        ],
    ))
}

fn cl_hcomm(s: &OrderedSemigroup) -> Result<BundleResult> {
    premise("CL-HCOMM", regular(s).holds)?;
    Ok(BundleResult::new(
        "CL-HCOMM",
        BundleKind::Equivalence,
        vec![
            cond("S is Clifford", 0, clifford_condition(s)),
            cond("S is H-commutative", 0, h_commutative(s)),
        ],
    ))
}

fn cl_cresef(s: &OrderedSemigroup) -> BundleResult {
    let idem = ordered_idempotents(s);
    let esf_in_fse = forall_in2(&idem, |e, f| {
        s.elements().all(|x| {
            let t = s.mul(s.mul(e, x), f);
            below(s, t, |y| s.mul(s.mul(f, y), e))
        })
    });
    BundleResult::new(
        "CL-CRESEF",
        BundleKind::Equivalence,
        vec![
            cond("S is Clifford", 0, clifford(s)),
            cond(
                "S is completely regular and eSf ⊆ (fSe] for all e, f ∈ E≤(S)",
                0,
                completely_regular(s).and(|| esf_in_fse),
            ),
        ],
    )
}

fn cl_crinv(s: &OrderedSemigroup) -> BundleResult {
    BundleResult::new(
        "CL-CRINV",
        BundleKind::Equivalence,
        vec![
            cond("S is Clifford", 0, clifford(s)),
            cond(
                "S is completely regular and inverse",
                0,
                completely_regular(s).and(|| inverse(s)),
            ),
        ],
    )
}

fn lcl_eq5(s: &OrderedSemigroup) -> Result<BundleResult> {
    premise("LCL-EQ5", regular(s).holds)?;
    let idem = ordered_idempotents(s);
    let mut ea_below_xe = Verdict::yes();
    'outer: for a in s.elements() {
        for e in idem.iter() {
            if !below(s, s.mul(e, a), |x| s.mul(x, e)) {
                ea_below_xe = Verdict::fails_at(vec![a, e]);
                break 'outer;
            }
        }
    }
    let r = green_relation(s, Green::R);
    let l = green_relation(s, Green::L);
    Ok(BundleResult::new(
        "LCL-EQ5",
        BundleKind::Equivalence,
        vec![
            cond("S is left Clifford", 0, left_clifford_condition(s)),
            cond(
                "(eS] ⊆ (Se] for all e ∈ E≤(S)",
                0,
                set_inclusion(&idem, |e| right_translate(s, e), |e| left_translate(s, e)),
            ),
            cond(
                "for all a and e ∈ E≤(S) some x gives ea <= xe",
                0,
                ea_below_xe,
            ),
            cond(
                "for all a, b some x gives ab <= xa",
                0,
                forall2(s, |a, b| below(s, s.mul(a, b), |x| s.mul(x, a))),
            ),
            cond(
                "R ⊆ L",
                0,
                Verdict::from_counterexample(r.first_pair_outside(&l).map(|(a, b)| vec![a, b])),
            ),
        ],
    ))
}

fn lcl_eq2(s: &OrderedSemigroup) -> BundleResult {
    let idem = ordered_idempotents(s);
    let in_asa2 = forall1(s, |a| {
        let a2 = s.mul(a, a);
        below(s, a, |x| s.mul(s.mul(a, x), a2))
    });
    let ef_in_efsfe = forall_in2(&idem, |e, f| {
        let ef = s.mul(e, f);
        let fe = s.mul(f, e);
        below(s, ef, |x| s.mul(s.mul(ef, x), fe))
    });
    BundleResult::new(
        "LCL-EQ2",
        BundleKind::Equivalence,
        vec![
            cond("S is left Clifford", 0, left_clifford(s)),
            cond(
                "a ∈ (aSa²] for all a, and ef ∈ (efSfe] for all e, f ∈ E≤(S)",
                0,
                in_asa2.and(|| ef_in_efsfe),
            ),
        ],
    )
}

/// Evaluates one registered bundle.
pub fn equivalence_bundle(s: &OrderedSemigroup, id: &str) -> Result<BundleResult> {
    match id {
        "CR-EQ5" => Ok(cr_eq5(s)),
        "GL-CHAR" => Ok(gl_char(s)),
        "GL-HREL" => gl_hrel(s),
        "INV-COMM" => inv_comm(s),
        "CR-HCOMM" => cr_hcomm(s),
        "CR-INV" => Ok(cr_inv(s)),
        "CR-HCLASS" => Ok(cr_hclass(s)),
        "CL-EQ" => cl_eq(s),
        "CL-HCOMM" => cl_hcomm(s),
        "CL-CRESEF" => Ok(cl_cresef(s)),
        "CL-CRINV" => Ok(cl_crinv(s)),
        "LCL-EQ5" => lcl_eq5(s),
        "LCL-EQ2" => Ok(lcl_eq2(s)),
        other => Err(Error::UnknownBundle(other.to_string())),
    }
}

// ---------------------------------------------------------------------------
// reports

/// A check that either ran or had its premise fail.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Checked<T> {
    Evaluated(T),
    NotApplicable,
}

impl<T> Checked<T> {
    pub fn from_result(r: Result<T>) -> Result<Self> {
        match r {
            Ok(v) => Ok(Checked::Evaluated(v)),
            Err(Error::NotApplicable(_)) => Ok(Checked::NotApplicable),
            Err(e) => Err(e),
        }
    }

    pub fn evaluated(&self) -> Option<&T> {
        match self {
            Checked::Evaluated(v) => Some(v),
            Checked::NotApplicable => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Implication {
    pub statement: &'static str,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    /// Whether the structure is (ordered) regular; Green's relations and the
    /// regular-only predicates are only meaningful when it is.
    pub regular: bool,
    pub predicates: BTreeMap<String, Checked<Verdict>>,
    pub bundles: Vec<(String, Checked<BundleResult>)>,
    pub implications: Vec<Implication>,
}

impl ClassificationReport {
    /// `true` when the predicate was evaluated and holds.
    pub fn is(&self, name: &str) -> bool {
        matches!(
            self.predicates.get(name),
            Some(Checked::Evaluated(Verdict { holds: true, .. }))
        )
    }

    pub fn all_bundles_agree(&self) -> bool {
        self.bundles
            .iter()
            .all(|(_, b)| b.evaluated().is_none_or(|r| r.agree))
    }

    pub fn implications_hold(&self) -> bool {
        self.implications.iter().all(|i| i.holds)
    }
}

/// Predicate verdicts only, without any bundle.
pub fn classify_predicates(s: &OrderedSemigroup) -> ClassificationReport {
    let predicates: BTreeMap<String, Checked<Verdict>> = PREDICATES
        .iter()
        .map(|&name| {
            let checked = Checked::from_result(predicate(s, name)).expect("registered predicate");
            (name.to_string(), checked)
        })
        .collect();
    let mut report = ClassificationReport {
        regular: false,
        predicates,
        bundles: Vec::new(),
        implications: Vec::new(),
    };
    report.regular = report.is("regular");
    report.implications = implications(&report);
    report
}

/// Every predicate, every equivalence bundle and every structure theorem.
pub fn classify(s: &OrderedSemigroup) -> Result<ClassificationReport> {
    let mut report = classify_predicates(s);
    for id in BUNDLES {
        report.bundles.push((
            id.to_string(),
            Checked::from_result(equivalence_bundle(s, id))?,
        ));
    }
    for id in THEOREMS {
        report.bundles.push((
            id.to_string(),
            Checked::from_result(structure_theorem_check(s, id))?,
        ));
    }
    Ok(report)
}

/// Runs a bundle or a structure theorem by id.
pub fn run_check(s: &OrderedSemigroup, id: &str) -> Result<Checked<BundleResult>> {
    if BUNDLES.contains(&id) {
        Checked::from_result(equivalence_bundle(s, id))
    } else if THEOREMS.contains(&id) {
        Checked::from_result(structure_theorem_check(s, id))
    } else {
        Err(Error::UnknownBundle(id.to_string()))
    }
}

fn implications(r: &ClassificationReport) -> Vec<Implication> {
    let imp = |statement, p: bool, q: bool| Implication {
        statement,
        holds: !p || q,
    };
    vec![
        imp(
            "group_like => t_simple and completely_regular",
            r.is("group_like"),
            r.is("t_simple") && r.is("completely_regular"),
        ),
        imp(
            "clifford => completely_regular",
            r.is("clifford"),
            r.is("completely_regular"),
        ),
        imp(
            "clifford => left_clifford",
            r.is("clifford"),
            r.is("left_clifford"),
        ),
        imp(
            "completely_regular => regular",
            r.is("completely_regular"),
            r.is("regular"),
        ),
        imp("t_simple => regular", r.is("t_simple"), r.is("regular")),
        Implication {
            statement: "group_like <=> left_group_like and right_group_like",
            holds: r.is("group_like") == (r.is("left_group_like") && r.is("right_group_like")),
        },
    ]
}
