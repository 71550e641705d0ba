use std::collections::HashMap;
use std::hash::Hash;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::set::ElementSet;

/// A partition of the carrier `0..n`.
///
/// Class ids are canonical: classes are numbered in order of their least
/// member, so two relations are equal exactly when they are the same partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct EquivalenceRelation {
    labels: Vec<usize>,
    #[serde(skip)]
    classes: Vec<ElementSet>,
}

impl EquivalenceRelation {
    /// Builds from arbitrary per-element labels (any values, equal label = same class).
    pub fn from_labels<L: Eq + Hash>(universe: usize, labels: &[L]) -> Result<Self> {
        if labels.len() != universe || universe == 0 {
            return Err(Error::NotPartition(universe));
        }
        let mut ids: HashMap<&L, usize> = HashMap::new();
        let canon: Vec<usize> = labels
            .iter()
            .map(|l| {
                let next = ids.len();
                *ids.entry(l).or_insert(next)
            })
            .collect();
        Ok(Self::from_canonical(canon))
    }

    /// Partition by equality of `key(a)`.
    pub fn from_key<K: Eq + Hash, F: Fn(usize) -> K>(universe: usize, key: F) -> Self {
        let keys: Vec<K> = (0..universe).map(key).collect();
        Self::from_labels(universe, &keys).expect("one key per element")
    }

    fn from_canonical(labels: Vec<usize>) -> Self {
        let n = labels.len();
        let count = labels.iter().max().map_or(0, |m| m + 1);
        let mut classes = vec![ElementSet::empty(n); count];
        for (a, &c) in labels.iter().enumerate() {
            classes[c].insert(a);
        }
        EquivalenceRelation { labels, classes }
    }

    pub fn identity(universe: usize) -> Self {
        Self::from_canonical((0..universe).collect())
    }

    pub fn universal(universe: usize) -> Self {
        Self::from_canonical(vec![0; universe])
    }

    pub fn universe(&self) -> usize {
        self.labels.len()
    }

    /// Canonical class id of every element.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn class_id(&self, a: usize) -> usize {
        self.labels[a]
    }

    pub fn class_of(&self, a: usize) -> &ElementSet {
        &self.classes[self.labels[a]]
    }

    pub fn classes(&self) -> &[ElementSet] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    #[inline]
    pub fn related(&self, a: usize, b: usize) -> bool {
        self.labels[a] == self.labels[b]
    }

    /// `self ⊆ other` as sets of pairs: every class of `self` lies in one class of `other`.
    pub fn is_finer_than(&self, other: &Self) -> bool {
        assert_eq!(self.universe(), other.universe());
        self.classes.iter().all(|c| {
            let rep = c.first().expect("classes are nonempty");
            c.iter().all(|a| other.related(rep, a))
        })
    }

    /// Least pair `(a, b)` related by `self` but not by `other`.
    pub fn first_pair_outside(&self, other: &Self) -> Option<(usize, usize)> {
        let n = self.universe();
        (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .find(|&(a, b)| self.related(a, b) && !other.related(a, b))
    }

    /// Intersection of two equivalences.
    pub fn meet(&self, other: &Self) -> Self {
        assert_eq!(self.universe(), other.universe());
        Self::from_key(self.universe(), |a| (self.labels[a], other.labels[a]))
    }

    pub fn is_identity(&self) -> bool {
        self.num_classes() == self.universe()
    }

    pub fn is_universal(&self) -> bool {
        self.num_classes() == 1
    }
}
