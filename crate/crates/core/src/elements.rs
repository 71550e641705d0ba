//! Per-element predicates: ordered idempotents, the regularity variants,
//! ordered inverses, H-commutation and the group component `G_e`.
//!
//! Every existential is resolved by scanning candidates in ascending index
//! order, so the reported witness is always the least one.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::set::ElementSet;
use crate::structure::OrderedSemigroup;

/// `e <= e²`.
#[inline]
pub fn is_ordered_idempotent(s: &OrderedSemigroup, e: usize) -> bool {
    s.leq(e, s.mul(e, e))
}

/// The set `E≤(S)` of ordered idempotents.
pub fn ordered_idempotents(s: &OrderedSemigroup) -> ElementSet {
    ElementSet::from_members(
        s.size(),
        s.elements().filter(|&e| is_ordered_idempotent(s, e)),
    )
}

/// Least `x` with `a <= a x a`.
pub fn regular_witness(s: &OrderedSemigroup, a: usize) -> Option<usize> {
    s.least_with(a, |x| s.mul(s.mul(a, x), a))
}

/// Least `x` with `a <= a² x a²`.
pub fn completely_regular_witness(s: &OrderedSemigroup, a: usize) -> Option<usize> {
    let a2 = s.mul(a, a);
    s.least_with(a, |x| s.mul(s.mul(a2, x), a2))
}

/// Least element that is not ordered regular.
pub fn regular_counterexample(s: &OrderedSemigroup) -> Option<usize> {
    s.elements().find(|&a| regular_witness(s, a).is_none())
}

pub fn is_regular(s: &OrderedSemigroup) -> bool {
    regular_counterexample(s).is_none()
}

/// The four regularity flags of one element with their least witnesses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ElementRegularity {
    /// `a ∈ (aSa]`
    pub regular: Option<usize>,
    /// `a ∈ (a²Sa²]`
    pub completely_regular: Option<usize>,
    /// `a ∈ (Sa²]`
    pub left_regular: Option<usize>,
    /// `a ∈ (a²S]`
    pub right_regular: Option<usize>,
}

impl ElementRegularity {
    pub fn is_regular(&self) -> bool {
        self.regular.is_some()
    }
    pub fn is_completely_regular(&self) -> bool {
        self.completely_regular.is_some()
    }
    pub fn is_left_regular(&self) -> bool {
        self.left_regular.is_some()
    }
    pub fn is_right_regular(&self) -> bool {
        self.right_regular.is_some()
    }
}

pub fn element_regularity(s: &OrderedSemigroup, a: usize) -> ElementRegularity {
    let a2 = s.mul(a, a);
    ElementRegularity {
        regular: regular_witness(s, a),
        completely_regular: completely_regular_witness(s, a),
        left_regular: s.least_with(a, |x| s.mul(x, a2)),
        right_regular: s.least_with(a, |x| s.mul(a2, x)),
    }
}

/// `b` is an ordered inverse of `a`: `a <= aba` and `b <= bab`.
#[inline]
pub fn is_inverse_of(s: &OrderedSemigroup, b: usize, a: usize) -> bool {
    let ab = s.mul(a, b);
    s.leq(a, s.mul(ab, a)) && s.leq(b, s.mul(s.mul(b, a), b))
}

/// `V≤(a)`.
pub fn inverses_of(s: &OrderedSemigroup, a: usize) -> ElementSet {
    ElementSet::from_members(s.size(), s.elements().filter(|&b| is_inverse_of(s, b, a)))
}

/// Least `x` with `ab <= b x a`.
pub fn h_commute_witness(s: &OrderedSemigroup, a: usize, b: usize) -> Option<usize> {
    let ab = s.mul(a, b);
    s.least_with(ab, |x| s.mul(s.mul(b, x), a))
}

fn check_idempotent(s: &OrderedSemigroup, e: usize) -> Result<()> {
    if e >= s.size() {
        return Err(Error::ElementOutOfRange(e));
    }
    if !is_ordered_idempotent(s, e) {
        return Err(Error::NotIdempotent(e));
    }
    Ok(())
}

fn absorbed_by(s: &OrderedSemigroup, e: usize, a: usize) -> bool {
    s.leq(a, s.mul(e, a)) && s.leq(a, s.mul(a, e))
}

/// `G_e = { a : a <= ea, a <= ae, and e <= za, e <= az for one common z }`.
pub fn group_component(s: &OrderedSemigroup, e: usize) -> Result<ElementSet> {
    check_idempotent(s, e)?;
    Ok(ElementSet::from_members(
        s.size(),
        s.elements().filter(|&a| {
            absorbed_by(s, e, a)
                && s.elements()
                    .any(|z| s.leq(e, s.mul(z, a)) && s.leq(e, s.mul(a, z)))
        }),
    ))
}

/// Variant of [`group_component`] where the two `z` may differ.
pub fn group_component_independent(s: &OrderedSemigroup, e: usize) -> Result<ElementSet> {
    check_idempotent(s, e)?;
    Ok(ElementSet::from_members(
        s.size(),
        s.elements().filter(|&a| {
            absorbed_by(s, e, a)
                && s.elements().any(|z| s.leq(e, s.mul(z, a)))
                && s.elements().any(|z| s.leq(e, s.mul(a, z)))
        }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    #[test]
    fn ordered_idempotent_examples() {
        assert_eq!(ordered_idempotents(&sl2()).to_vec(), vec![0, 1]);
        assert_eq!(ordered_idempotents(&pz2()).to_vec(), vec![0, 2]);
        assert_eq!(ordered_idempotents(&lz2()).to_vec(), vec![0, 1]);
    }

    #[test]
    fn regularity_examples() {
        let r = element_regularity(&lz2(), 0);
        assert!(r.is_regular() && r.is_completely_regular());
        assert!(r.is_left_regular() && r.is_right_regular());
        let r = element_regularity(&sl2(), 0);
        assert_eq!(
            r,
            ElementRegularity {
                regular: Some(0),
                completely_regular: Some(0),
                left_regular: Some(0),
                right_regular: Some(0),
            }
        );
        let r = element_regularity(&null2(), 1);
        assert_eq!(r.regular, None);
        assert_eq!(r.completely_regular, None);
        // 1 <= 1*1*1 only works for x = 1 in SL2.
        assert_eq!(element_regularity(&sl2(), 1).regular, Some(1));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(inverses_of(&sl2(), 0).to_vec(), vec![0]);
        assert_eq!(inverses_of(&sl2(), 1).to_vec(), vec![1]);
        assert_eq!(inverses_of(&lz2(), 0).to_vec(), vec![0, 1]);
        assert!(inverses_of(&null2(), 1).is_empty());
    }

    #[test]
    fn h_commute_examples() {
        assert_eq!(h_commute_witness(&sl2(), 0, 1), Some(0));
        assert_eq!(h_commute_witness(&lz2(), 0, 1), None);
        assert_eq!(h_commute_witness(&t1(), 0, 0), Some(0));
    }

    #[test]
    fn group_component_examples() {
        assert_eq!(group_component(&sl2(), 1).unwrap().to_vec(), vec![1]);
        assert_eq!(group_component(&sl2(), 0).unwrap().to_vec(), vec![0]);
        assert_eq!(group_component(&pz2(), 0).unwrap().to_vec(), vec![0, 1, 2]);
        assert_eq!(group_component(&t1(), 0).unwrap().to_vec(), vec![0]);
        assert_eq!(group_component(&pz2(), 1), Err(Error::NotIdempotent(1)));
        assert_eq!(
            group_component_independent(&pz2(), 0).unwrap(),
            group_component(&pz2(), 0).unwrap()
        );
    }
}
