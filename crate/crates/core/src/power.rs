//! The ordered semigroup `P_f(F)` of nonempty subsets of a finite semigroup,
//! its universal property, and the three correspondences between properties
//! of `F` and of `P_f(F)`.

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{completely_regular, left_group_like, t_simple};
use crate::error::{Error, Result};
use crate::limits::{guard, limits};
use crate::structure::{FiniteSemigroup, OrderedSemigroup};
use crate::verdict::{cond, BundleKind, BundleResult, Verdict};

/// Above this base size the constructed table is trusted instead of re-validated.
const VALIDATE_UP_TO: usize = 7;

/// `P_f(F)` together with the subset each element stands for.
#[derive(Debug, Clone)]
pub struct PowerSemigroup {
    pub structure: OrderedSemigroup,
    /// Members of the subset behind each element, in carrier order.
    pub subsets: Vec<Vec<usize>>,
}

impl PowerSemigroup {
    /// The element `{x}`. Singletons come first in carrier order, so this is `x`.
    pub fn singleton(&self, x: usize) -> usize {
        debug_assert_eq!(self.subsets[x], vec![x]);
        x
    }

    /// Index of the subset with the given members.
    pub fn index_of(&self, members: &[usize]) -> Option<usize> {
        let mut sorted = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        self.subsets.iter().position(|s| *s == sorted)
    }

    /// `l : F -> P_f(F)`, `x ↦ {x}`.
    pub fn embedding(&self) -> SemigroupMorphism {
        let n = self.subsets.iter().filter(|s| s.len() == 1).count();
        SemigroupMorphism {
            source_size: n,
            target_size: self.structure.size(),
            map: (0..n).collect(),
        }
    }
}

fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Builds `P_f(F)`, ordered by inclusion.
///
/// The carrier lists the nonempty subsets sorted by size, then
/// lexicographically by their members.
pub fn power_ordered_semigroup(f: &FiniteSemigroup) -> Result<PowerSemigroup> {
    let n = f.size();
    guard("power", n, limits().power)?;
    let mut masks: Vec<u64> = (1..1u64 << n).collect();
    masks.sort_by_key(|&m| (m.count_ones(), members(m)));
    let mut index = vec![0usize; 1 << n];
    for (i, &m) in masks.iter().enumerate() {
        index[m as usize] = i;
    }
    let size = masks.len();
    let table: Vec<usize> = masks
        .par_iter()
        .flat_map_iter(|&a| {
            let index = &index;
            masks.iter().map(move |&b| {
                let mut product = 0u64;
                for x in members(a) {
                    for y in members(b) {
                        product |= 1 << f.mul(x, y);
                    }
                }
                index[product as usize]
            })
        })
        .collect();
    let leq: Vec<bool> = masks
        .iter()
        .flat_map(|&a| masks.iter().map(move |&b| a & !b == 0))
        .collect();
    let structure = if n <= VALIDATE_UP_TO {
        OrderedSemigroup::from_parts(FiniteSemigroup::from_flat(size, table)?, leq)?
    } else {
        OrderedSemigroup::from_parts_unchecked(
            FiniteSemigroup::from_flat_unchecked(size, table),
            leq,
        )
    };
    Ok(PowerSemigroup {
        structure,
        subsets: masks.into_iter().map(members).collect(),
    })
}

/// A product-preserving map given by its values on `0..source_size`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemigroupMorphism {
    pub source_size: usize,
    pub target_size: usize,
    pub map: Vec<usize>,
}

impl SemigroupMorphism {
    /// Checks that `map` is a homomorphism from `source` into `target`.
    pub fn new(
        source: &FiniteSemigroup,
        target: &OrderedSemigroup,
        map: Vec<usize>,
    ) -> Result<Self> {
        if map.len() != source.size() {
            return Err(Error::NotMorphism(format!(
                "map has {} entries for {} elements",
                map.len(),
                source.size()
            )));
        }
        if let Some(&v) = map.iter().find(|&&v| v >= target.size()) {
            return Err(Error::ElementOutOfRange(v));
        }
        for a in source.elements() {
            for b in source.elements() {
                if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Err(Error::NotMorphism(format!(
                        "f({a}·{b}) differs from f({a})·f({b})"
                    )));
                }
            }
        }
        Ok(SemigroupMorphism {
            source_size: source.size(),
            target_size: target.size(),
            map,
        })
    }

    /// Checks products and order between two ordered semigroups.
    pub fn between_ordered(
        source: &OrderedSemigroup,
        target: &OrderedSemigroup,
        map: Vec<usize>,
    ) -> Result<Self> {
        let m = Self::new(source.semigroup(), target, map)?;
        for a in source.elements() {
            for b in source.elements() {
                if source.leq(a, b) && !target.leq(m.map[a], m.map[b]) {
                    return Err(Error::NotMorphism(format!(
                        "{a} <= {b} but f({a}) is not below f({b})"
                    )));
                }
            }
        }
        Ok(m)
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }
}

/// Every homomorphism from `source` into `target`, in lexicographic order of maps.
pub fn all_morphisms(
    source: &FiniteSemigroup,
    target: &OrderedSemigroup,
) -> Vec<SemigroupMorphism> {
    let n = source.size();
    let m = target.size();
    let mut out = Vec::new();
    let mut map = vec![0usize; n];
    loop {
        if let Ok(f) = SemigroupMorphism::new(source, target, map.clone()) {
            out.push(f);
        }
        let Some(i) = (0..n).rev().find(|&i| map[i] + 1 < m) else {
            return out;
        };
        map[i] += 1;
        map[i + 1..].iter_mut().for_each(|v| *v = 0);
    }
}

/// Least upper bound of `a` and `b`, if it exists.
pub fn join(s: &OrderedSemigroup, a: usize, b: usize) -> Option<usize> {
    let uppers: Vec<usize> = s
        .elements()
        .filter(|&u| s.leq(a, u) && s.leq(b, u))
        .collect();
    uppers
        .iter()
        .copied()
        .find(|&u| uppers.iter().all(|&v| s.leq(u, v)))
}

/// Extends `f : F -> S` to `φ : P_f(F) -> S`, `φ(A) = ∨ f(A)`.
///
/// The result is checked to preserve products and order and to satisfy
/// `φ({x}) = f(x)`.
pub fn universal_extension(
    f_source: &FiniteSemigroup,
    target: &OrderedSemigroup,
    f: &SemigroupMorphism,
) -> Result<SemigroupMorphism> {
    let f = SemigroupMorphism::new(f_source, target, f.map.clone())?;
    let power = power_ordered_semigroup(f_source)?;
    let mut map = Vec::with_capacity(power.subsets.len());
    for subset in &power.subsets {
        let mut acc = f.apply(subset[0]);
        for &x in &subset[1..] {
            let image = f.apply(x);
            acc = join(target, acc, image).ok_or(Error::NoJoin(acc, image))?;
        }
        map.push(acc);
    }
    for x in f_source.elements() {
        if map[power.singleton(x)] != f.apply(x) {
            return Err(Error::NotMorphism(format!(
                "φ({{{x}}}) differs from f({x})"
            )));
        }
    }
    SemigroupMorphism::between_ordered(&power.structure, target, map)
}

// ---------------------------------------------------------------------------
// unordered deciders, by definition on F

/// `xa = b` and `ay = b` are solvable for all `a, b`; counterexample `(a, b)`.
pub fn is_group(f: &FiniteSemigroup) -> Verdict {
    for a in f.elements() {
        for b in f.elements() {
            let left = f.elements().any(|x| f.mul(x, a) == b);
            let right = f.elements().any(|y| f.mul(a, y) == b);
            if !(left && right) {
                return Verdict::fails_at(vec![a, b]);
            }
        }
    }
    Verdict::yes()
}

/// `a = axa` solvable for every `a`; counterexample `(a)`.
pub fn is_regular_semigroup(f: &FiniteSemigroup) -> Verdict {
    Verdict::from_counterexample(
        f.elements()
            .find(|&a| !f.elements().any(|x| f.mul(f.mul(a, x), a) == a))
            .map(|a| vec![a]),
    )
}

/// Regular and left simple (`Sa = S` for all `a`).
pub fn is_left_group(f: &FiniteSemigroup) -> Verdict {
    is_regular_semigroup(f).and(|| {
        for a in f.elements() {
            for b in f.elements() {
                if !f.elements().any(|x| f.mul(x, a) == b) {
                    return Verdict::fails_at(vec![a, b]);
                }
            }
        }
        Verdict::yes()
    })
}

/// `a = a²xa²` solvable for every `a`.
pub fn is_completely_regular_semigroup(f: &FiniteSemigroup) -> Verdict {
    Verdict::from_counterexample(
        f.elements()
            .find(|&a| {
                let a2 = f.mul(a, a);
                !f.elements().any(|x| f.mul(f.mul(a2, x), a2) == a)
            })
            .map(|a| vec![a]),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PowerProperty {
    /// `F` is a group iff `P_f(F)` is t-simple.
    TSimple,
    /// `F` is a left group iff `P_f(F)` is left group like.
    LeftGroupLike,
    /// `F` is completely regular iff `P_f(F)` is.
    CompletelyRegular,
}

impl PowerProperty {
    pub const ALL: [PowerProperty; 3] = [
        PowerProperty::TSimple,
        PowerProperty::LeftGroupLike,
        PowerProperty::CompletelyRegular,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PowerProperty::TSimple => "t_simple",
            PowerProperty::LeftGroupLike => "left_group_like",
            PowerProperty::CompletelyRegular => "completely_regular",
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|p| p.name() == name)
            .ok_or_else(|| Error::UnknownPredicate(name.to_string()))
    }
}

/// Compares the unordered property of `F` with the ordered one of `P_f(F)`.
pub fn power_correspondence_check(
    f: &FiniteSemigroup,
    property: PowerProperty,
) -> Result<BundleResult> {
    let power = power_ordered_semigroup(f)?;
    let p = &power.structure;
    let (label_f, base, label_p, ordered) = match property {
        PowerProperty::TSimple => (
            "F is a group",
            is_group(f),
            "P_f(F) is t-simple",
            t_simple(p),
        ),
        PowerProperty::LeftGroupLike => (
            "F is a left group",
            is_left_group(f),
            "P_f(F) is left group like",
            left_group_like(p),
        ),
        PowerProperty::CompletelyRegular => (
            "F is completely regular",
            is_completely_regular_semigroup(f),
            "P_f(F) is completely regular",
            completely_regular(p),
        ),
    };
    Ok(BundleResult::new(
        &format!("POWER-{}", property.name()),
        BundleKind::Equivalence,
        vec![cond(label_f, 0, base), cond(label_p, 0, ordered)],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    #[test]
    fn power_of_the_two_group_is_pz2() {
        let p = power_ordered_semigroup(&z2()).unwrap();
        assert_eq!(p.structure, pz2());
        assert_eq!(p.subsets, vec![vec![0], vec![1], vec![0, 1]]);
        assert_eq!(p.index_of(&[1, 0]), Some(2));
    }

    #[test]
    fn power_of_trivial_is_trivial() {
        assert_eq!(power_ordered_semigroup(&trivial()).unwrap().structure, t1());
    }

    #[test]
    fn power_of_left_zero_is_left_group_like() {
        let p = power_ordered_semigroup(&left_zero2()).unwrap();
        assert_eq!(p.structure.size(), 3);
        assert!(left_group_like(&p.structure).holds);
    }

    #[test]
    fn power_size_guard() {
        let big = FiniteSemigroup::from_flat(11, vec![0; 121]).unwrap();
        assert_eq!(
            power_ordered_semigroup(&big).unwrap_err(),
            Error::SizeLimit {
                what: "power",
                size: 11,
                limit: 10
            }
        );
    }

    #[test]
    fn universal_extension_examples() {
        let z2 = z2();
        let pz2 = pz2();
        let l = SemigroupMorphism::new(&z2, &pz2, vec![0, 1]).unwrap();
        assert_eq!(
            universal_extension(&z2, &pz2, &l).unwrap().map,
            vec![0, 1, 2]
        );
        let sl2 = sl2();
        let f = SemigroupMorphism::new(&z2, &sl2, vec![1, 1]).unwrap();
        assert_eq!(
            universal_extension(&z2, &sl2, &f).unwrap().map,
            vec![1, 1, 1]
        );
        let t = trivial();
        for e in 0..2 {
            let f = SemigroupMorphism::new(&t, &sl2, vec![e]).unwrap();
            assert_eq!(universal_extension(&t, &sl2, &f).unwrap().map, vec![e]);
        }
    }

    #[test]
    fn missing_join_is_reported() {
        let lz = left_zero2();
        let target = lz2();
        let f = SemigroupMorphism::new(&lz, &target, vec![0, 1]).unwrap();
        assert_eq!(
            universal_extension(&lz, &target, &f),
            Err(Error::NoJoin(0, 1))
        );
    }

    #[test]
    fn morphism_errors() {
        let z2 = z2();
        assert!(matches!(
            SemigroupMorphism::new(&z2, &sl2(), vec![0, 1]),
            Err(Error::NotMorphism(_))
        ));
        assert_eq!(
            SemigroupMorphism::new(&z2, &sl2(), vec![0, 2]),
            Err(Error::ElementOutOfRange(2))
        );
        assert_eq!(
            all_morphisms(&z2, &sl2())
                .into_iter()
                .map(|f| f.map)
                .collect::<Vec<_>>(),
            vec![vec![0, 0], vec![1, 1]]
        );
    }

    #[test]
    fn unordered_deciders() {
        assert!(is_group(&z2()).holds);
        assert_eq!(is_group(&left_zero2()), Verdict::fails_at(vec![0, 1]));
        assert!(is_left_group(&left_zero2()).holds);
        assert_eq!(
            is_completely_regular_semigroup(&null_semigroup2()),
            Verdict::fails_at(vec![1])
        );
    }

    #[test]
    fn correspondence_examples() {
        let r = power_correspondence_check(&z2(), PowerProperty::TSimple).unwrap();
        assert!(r.agree && r.value() == Some(true));
        let r = power_correspondence_check(&left_zero2(), PowerProperty::TSimple).unwrap();
        assert!(r.agree && r.value() == Some(false));
        let r = power_correspondence_check(&null_semigroup2(), PowerProperty::CompletelyRegular)
            .unwrap();
        assert!(r.agree && r.value() == Some(false));
        assert!(PowerProperty::parse("nope").is_err());
    }
}
