//! Ideals, principal ideals, Green's relations, filters and the relation `N`.

use serde::Serialize;

use crate::elements::{is_ordered_idempotent, regular_counterexample};
use crate::error::{Error, Result};
use crate::limits::{guard, limits};
use crate::relation::EquivalenceRelation;
use crate::set::ElementSet;
use crate::structure::OrderedSemigroup;
use crate::verdict::{cond, BundleKind, BundleResult, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

impl Side {
    pub const ALL: [Side; 3] = [Side::Left, Side::Right, Side::TwoSided];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Green {
    L,
    R,
    J,
    H,
}

impl Green {
    pub const ALL: [Green; 4] = [Green::L, Green::R, Green::J, Green::H];

    pub fn parse(s: &str) -> Option<Green> {
        match s {
            "L" | "l" => Some(Green::L),
            "R" | "r" => Some(Green::R),
            "J" | "j" => Some(Green::J),
            "H" | "h" => Some(Green::H),
            _ => None,
        }
    }
}

impl std::fmt::Display for Green {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

/// The smallest ideal of the given side containing `a`:
/// `({a} ∪ Sa]`, `({a} ∪ aS]` or `({a} ∪ Sa ∪ aS ∪ SaS]`.
pub fn principal_ideal(s: &OrderedSemigroup, a: usize, side: Side) -> ElementSet {
    let mut gen = s.singleton(a);
    for x in s.elements() {
        match side {
            Side::Left => {
                gen.insert(s.mul(x, a));
            }
            Side::Right => {
                gen.insert(s.mul(a, x));
            }
            Side::TwoSided => {
                gen.insert(s.mul(x, a));
                gen.insert(s.mul(a, x));
                for y in s.elements() {
                    gen.insert(s.mul(s.mul(x, a), y));
                }
            }
        }
    }
    s.down_closure(&gen)
}

/// Why a set fails to be an ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdealViolation {
    /// `s * member` leaves the set.
    LeftAbsorption { s: usize, member: usize },
    /// `member * s` leaves the set.
    RightAbsorption { member: usize, s: usize },
    /// `below <= member` but `below` is missing.
    NotDownClosed { below: usize, member: usize },
}

impl IdealViolation {
    pub fn tuple(&self) -> Vec<usize> {
        match *self {
            IdealViolation::LeftAbsorption { s, member } => vec![s, member],
            IdealViolation::RightAbsorption { member, s } => vec![member, s],
            IdealViolation::NotDownClosed { below, member } => vec![below, member],
        }
    }
}

/// Checks absorption and downward closure; `Ok(None)` means `set` is an ideal.
pub fn is_ideal(
    s: &OrderedSemigroup,
    set: &ElementSet,
    side: Side,
) -> Result<Option<IdealViolation>> {
    if set.universe() != s.size() {
        return Err(Error::UniverseMismatch {
            expected: s.size(),
            found: set.universe(),
        });
    }
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(ideal_violation(s, set, side))
}

fn ideal_violation(s: &OrderedSemigroup, set: &ElementSet, side: Side) -> Option<IdealViolation> {
    if matches!(side, Side::Left | Side::TwoSided) {
        for x in s.elements() {
            if let Some(member) = set.iter().find(|&m| !set.contains(s.mul(x, m))) {
                return Some(IdealViolation::LeftAbsorption { s: x, member });
            }
        }
    }
    if matches!(side, Side::Right | Side::TwoSided) {
        for member in set.iter() {
            if let Some(x) = s.elements().find(|&x| !set.contains(s.mul(member, x))) {
                return Some(IdealViolation::RightAbsorption { member, s: x });
            }
        }
    }
    for below in s.elements() {
        if set.contains(below) {
            continue;
        }
        if let Some(member) = set.iter().find(|&m| s.leq(below, m)) {
            return Some(IdealViolation::NotDownClosed { below, member });
        }
    }
    None
}

/// All ideals of a side, ascending by size then lexicographically.
pub fn enumerate_ideals(s: &OrderedSemigroup, side: Side) -> Result<Vec<ElementSet>> {
    let n = s.size();
    guard("ideals", n, limits().ideals)?;
    let mut out: Vec<ElementSet> = (1u64..(1u64 << n))
        .map(|mask| ElementSet::from_members(n, (0..n).filter(|i| mask >> i & 1 == 1)))
        .filter(|set| ideal_violation(s, set, side).is_none())
        .collect();
    out.sort();
    Ok(out)
}

fn ideal_side(kind: Green) -> Side {
    match kind {
        Green::L => Side::Left,
        Green::R => Side::Right,
        _ => Side::TwoSided,
    }
}

/// Partition by equality of principal ideals; `H` is the meet of `L` and `R`.
///
/// Defined on every structure, regular or not.
pub fn green_relation(s: &OrderedSemigroup, kind: Green) -> EquivalenceRelation {
    match kind {
        Green::H => green_relation(s, Green::L).meet(&green_relation(s, Green::R)),
        _ => {
            let side = ideal_side(kind);
            let ideals: Vec<ElementSet> =
                s.elements().map(|a| principal_ideal(s, a, side)).collect();
            EquivalenceRelation::from_labels(s.size(), &ideals).expect("one ideal per element")
        }
    }
}

/// The least filter containing `a`: the smallest set containing `a` that is a
/// subsemigroup, prime (`xy ∈ F` forces `x, y ∈ F`) and upward closed.
pub fn principal_filter(s: &OrderedSemigroup, a: usize) -> ElementSet {
    let mut f = s.singleton(a);
    loop {
        let mut next = s.up_closure(&f);
        let members = next.to_vec();
        for &x in &members {
            for &y in &members {
                next.insert(s.mul(x, y));
            }
        }
        for x in s.elements() {
            for y in s.elements() {
                if f.contains(s.mul(x, y)) {
                    next.insert(x);
                    next.insert(y);
                }
            }
        }
        if next == f {
            return f;
        }
        f = next;
    }
}

/// `a N b` iff the principal filters of `a` and `b` coincide.
pub fn n_relation(s: &OrderedSemigroup) -> EquivalenceRelation {
    let filters: Vec<ElementSet> = s.elements().map(|a| principal_filter(s, a)).collect();
    EquivalenceRelation::from_labels(s.size(), &filters).expect("one filter per element")
}

/// `(eL] = L ∩ (eS]`, `(Re] = R ∩ (Se]` over every left ideal `L` and right
/// ideal `R`, and `(Sf] ∩ (eS] = (eSf]`, for ordered idempotents `e`, `f` of
/// a regular structure. A failing identity reports the members of the first
/// offending ideal.
pub fn lemma_bi13_check(s: &OrderedSemigroup, e: usize, f: usize) -> Result<BundleResult> {
    for x in [e, f] {
        if x >= s.size() {
            return Err(Error::ElementOutOfRange(x));
        }
    }
    if regular_counterexample(s).is_some() {
        return Err(Error::NotRegular);
    }
    for x in [e, f] {
        if !is_ordered_idempotent(s, x) {
            return Err(Error::NotIdempotent(x));
        }
    }
    let full = s.carrier();
    let es = s.down_closure(&s.set_product(&s.singleton(e), &full));
    let se = s.down_closure(&s.set_product(&full, &s.singleton(e)));
    let sf = s.down_closure(&s.set_product(&full, &s.singleton(f)));

    let left = enumerate_ideals(s, Side::Left)?
        .into_iter()
        .find(|l| s.down_closure(&s.set_product(&s.singleton(e), l)) != l.intersection(&es))
        .map(|l| l.to_vec());
    let right = enumerate_ideals(s, Side::Right)?
        .into_iter()
        .find(|r| s.down_closure(&s.set_product(r, &s.singleton(e))) != r.intersection(&se))
        .map(|r| r.to_vec());
    let esf =
        s.down_closure(&s.set_product(&s.set_product(&s.singleton(e), &full), &s.singleton(f)));
    let meet = sf.intersection(&es);
    let third = if meet == esf {
        Verdict::yes()
    } else {
        Verdict::fails_at(
            meet.union(&esf)
                .difference(&meet.intersection(&esf))
                .to_vec(),
        )
    };
    Ok(BundleResult::new(
        "BI13",
        BundleKind::Identities,
        vec![
            cond(
                "(eL] = L ∩ (eS] for every left ideal L",
                0,
                Verdict::from_counterexample(left),
            ),
            cond(
                "(Re] = R ∩ (Se] for every right ideal R",
                0,
                Verdict::from_counterexample(right),
            ),
            cond("(Sf] ∩ (eS] = (eSf]", 0, third),
        ],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    fn set(s: &OrderedSemigroup, m: &[usize]) -> ElementSet {
        ElementSet::from_members(s.size(), m.iter().copied())
    }

    #[test]
    fn principal_ideal_examples() {
        let sl2 = sl2();
        assert_eq!(principal_ideal(&sl2, 0, Side::Left).to_vec(), vec![0]);
        assert_eq!(principal_ideal(&sl2, 1, Side::Left).to_vec(), vec![0, 1]);
        let lz2 = lz2();
        assert_eq!(principal_ideal(&lz2, 0, Side::Left).to_vec(), vec![0, 1]);
        assert_eq!(principal_ideal(&lz2, 0, Side::Right).to_vec(), vec![0]);
        assert_eq!(
            principal_ideal(&lz2, 0, Side::TwoSided).to_vec(),
            vec![0, 1]
        );
    }

    #[test]
    fn non_regular_principal_ideal_keeps_generator() {
        let null2 = null2();
        assert_eq!(principal_ideal(&null2, 1, Side::Left).to_vec(), vec![0, 1]);
        assert_eq!(principal_ideal(&null2, 0, Side::TwoSided).to_vec(), vec![0]);
    }

    #[test]
    fn is_ideal_examples() {
        let sl2 = sl2();
        assert_eq!(is_ideal(&sl2, &set(&sl2, &[0]), Side::Left), Ok(None));
        assert_eq!(
            is_ideal(&sl2, &set(&sl2, &[1]), Side::Left),
            Ok(Some(IdealViolation::LeftAbsorption { s: 0, member: 1 }))
        );
        for (_, s) in all() {
            assert_eq!(is_ideal(&s, &s.carrier(), Side::TwoSided), Ok(None));
        }
        assert_eq!(
            is_ideal(&sl2, &sl2.empty_set(), Side::Left),
            Err(Error::EmptySet)
        );
        let c3 = chain3();
        assert_eq!(
            is_ideal(&c3, &set(&c3, &[0, 2]), Side::TwoSided),
            Ok(Some(IdealViolation::LeftAbsorption { s: 1, member: 2 }))
        );
    }

    #[test]
    fn down_closure_violation_is_reported() {
        // Discrete-ordered null semigroup on 3 points with 1 <= 2 added.
        let s = OrderedSemigroup::new(
            3,
            vec![vec![0, 0, 0], vec![0, 0, 0], vec![0, 0, 0]],
            &[(1, 2)],
        )
        .unwrap();
        assert_eq!(
            is_ideal(&s, &set(&s, &[0, 2]), Side::Left),
            Ok(Some(IdealViolation::NotDownClosed {
                below: 1,
                member: 2
            }))
        );
    }

    #[test]
    fn enumerate_ideals_examples() {
        let sl2 = sl2();
        assert_eq!(
            enumerate_ideals(&sl2, Side::Left).unwrap(),
            vec![set(&sl2, &[0]), set(&sl2, &[0, 1])]
        );
        assert_eq!(
            enumerate_ideals(&t1(), Side::TwoSided).unwrap(),
            vec![t1().carrier()]
        );
        let lz2 = lz2();
        assert_eq!(
            enumerate_ideals(&lz2, Side::Left).unwrap(),
            vec![lz2.carrier()]
        );
    }

    #[test]
    fn enumerate_ideals_guard() {
        let n = 13;
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).map(|j| usize::min(i, j)).collect())
            .collect();
        let s = OrderedSemigroup::new(n, rows, &[]).unwrap();
        assert!(matches!(
            enumerate_ideals(&s, Side::Left),
            Err(Error::SizeLimit { size: 13, .. })
        ));
    }

    #[test]
    fn green_examples() {
        let lz2 = lz2();
        assert!(green_relation(&lz2, Green::L).is_universal());
        assert!(green_relation(&lz2, Green::R).is_identity());
        assert!(green_relation(&lz2, Green::H).is_identity());
        assert!(green_relation(&lz2, Green::J).is_universal());
        let sl2 = sl2();
        for g in Green::ALL {
            assert!(green_relation(&sl2, g).is_identity());
            assert!(green_relation(&t1(), g).is_universal());
        }
    }

    #[test]
    fn filter_examples() {
        let sl2 = sl2();
        assert_eq!(principal_filter(&sl2, 1).to_vec(), vec![1]);
        assert_eq!(principal_filter(&sl2, 0).to_vec(), vec![0, 1]);
        assert_eq!(principal_filter(&lz2(), 0).to_vec(), vec![0, 1]);
    }

    #[test]
    fn n_relation_examples() {
        assert!(n_relation(&sl2()).is_identity());
        assert!(n_relation(&lz2()).is_universal());
        assert!(n_relation(&t1()).is_universal());
    }

    #[test]
    fn bi13_examples() {
        assert!(lemma_bi13_check(&sl2(), 1, 1).unwrap().agree);
        assert!(lemma_bi13_check(&t1(), 0, 0).unwrap().agree);
        assert!(lemma_bi13_check(&lz2(), 0, 1).unwrap().agree);
        assert_eq!(lemma_bi13_check(&null2(), 0, 0), Err(Error::NotRegular));
        assert_eq!(lemma_bi13_check(&pz2(), 1, 0), Err(Error::NotIdempotent(1)));
    }
}
