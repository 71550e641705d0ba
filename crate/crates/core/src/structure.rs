//! The finite ordered semigroup data model and its primitive set operators.
//!
//! Elements are the indices `0..n`. A structure is immutable once validated;
//! every construction path goes through the same associativity, partial-order
//! and compatibility checks, and each failure names the least violating tuple.

use serde::Serialize;

use crate::error::{CompatSide, Error, Result};
use crate::set::ElementSet;

/// A finite semigroup given by its Cayley table, with no order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteSemigroup {
    size: usize,
    table: Vec<usize>,
    names: Option<Vec<String>>,
}

/// A finite semigroup together with a compatible partial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedSemigroup {
    semigroup: FiniteSemigroup,
    leq: Vec<bool>,
}

/// An ordered subsemigroup materialized as a structure of its own.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Substructure {
    pub structure: OrderedSemigroup,
    /// `embedding[i]` is the parent index of the substructure's element `i`.
    pub embedding: Vec<usize>,
}

fn flatten_table(size: usize, rows: Vec<Vec<usize>>) -> Result<Vec<usize>> {
    if size == 0 {
        return Err(Error::EmptyCarrier);
    }
    if rows.len() != size {
        return Err(Error::TableShape {
            size,
            rows: rows.len(),
            row: rows.len().min(size),
            cols: 0,
        });
    }
    let mut table = Vec::with_capacity(size * size);
    for (i, row) in rows.into_iter().enumerate() {
        if row.len() != size {
            return Err(Error::TableShape {
                size,
                rows: size,
                row: i,
                cols: row.len(),
            });
        }
        for (j, v) in row.into_iter().enumerate() {
            if v >= size {
                return Err(Error::EntryOutOfRange {
                    row: i,
                    col: j,
                    value: v,
                });
            }
            table.push(v);
        }
    }
    Ok(table)
}

/// Least `(i, j, k)` with `(ij)k != i(jk)`.
fn first_non_associative(size: usize, table: &[usize]) -> Option<(usize, usize, usize)> {
    for i in 0..size {
        for j in 0..size {
            let ij = table[i * size + j];
            for k in 0..size {
                let jk = table[j * size + k];
                if table[ij * size + k] != table[i * size + jk] {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

impl FiniteSemigroup {
    pub fn new(size: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        let table = flatten_table(size, rows)?;
        Self::from_flat(size, table)
    }

    /// Builds from a row-major table.
    pub fn from_flat(size: usize, table: Vec<usize>) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptyCarrier);
        }
        if table.len() != size * size {
            return Err(Error::TableShape {
                size,
                rows: table.len() / size,
                row: table.len() / size,
                cols: table.len() % size,
            });
        }
        if let Some(pos) = table.iter().position(|&v| v >= size) {
            return Err(Error::EntryOutOfRange {
                row: pos / size,
                col: pos % size,
                value: table[pos],
            });
        }
        if let Some((i, j, k)) = first_non_associative(size, &table) {
            return Err(Error::NotAssociative(i, j, k));
        }
        Ok(FiniteSemigroup {
            size,
            table,
            names: None,
        })
    }

    /// Skips validation; callers guarantee associativity by construction.
    pub(crate) fn from_flat_unchecked(size: usize, table: Vec<usize>) -> Self {
        debug_assert_eq!(table.len(), size * size);
        FiniteSemigroup {
            size,
            table,
            names: None,
        }
    }

    /// Display names; the count must match the carrier.
    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.size, "one name per element");
        self.names = Some(names);
        self
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b]
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn flat_table(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.size)
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }
}

/// Reflexive closure of a pair list as a flat `n x n` matrix.
fn order_matrix(size: usize, pairs: &[(usize, usize)]) -> Result<Vec<bool>> {
    let mut leq = vec![false; size * size];
    for i in 0..size {
        leq[i * size + i] = true;
    }
    for &(a, b) in pairs {
        if a >= size || b >= size {
            return Err(Error::OrderOutOfRange(a, b));
        }
        leq[a * size + b] = true;
    }
    Ok(leq)
}

/// Reflexive-transitive closure of a pair list (used only on explicit opt-in).
pub fn close_order(size: usize, pairs: &[(usize, usize)]) -> Result<Vec<(usize, usize)>> {
    let mut leq = order_matrix(size, pairs)?;
    for k in 0..size {
        for i in 0..size {
            if leq[i * size + k] {
                for j in 0..size {
                    if leq[k * size + j] {
                        leq[i * size + j] = true;
                    }
                }
            }
        }
    }
    Ok(pairs_of(size, &leq))
}

fn pairs_of(size: usize, leq: &[bool]) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for a in 0..size {
        for b in 0..size {
            if a != b && leq[a * size + b] {
                pairs.push((a, b));
            }
        }
    }
    pairs
}

/// Checks that `leq` is a partial order compatible with the table of `s`.
pub(crate) fn check_order(s: &FiniteSemigroup, leq: &[bool]) -> Result<()> {
    let n = s.size;
    let le = |a: usize, b: usize| leq[a * n + b];
    for i in 0..n {
        if !le(i, i) {
            return Err(Error::NotReflexive(i));
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && le(i, j) && le(j, i) {
                return Err(Error::NotAntisymmetric(i, j));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if !le(i, j) {
                continue;
            }
            for k in 0..n {
                if le(j, k) && !le(i, k) {
                    return Err(Error::NotTransitive(i, j, k));
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if a == b || !le(a, b) {
                continue;
            }
            for c in 0..n {
                if !le(s.mul(c, a), s.mul(c, b)) {
                    return Err(Error::NotCompatible {
                        a,
                        b,
                        c,
                        side: CompatSide::Left,
                    });
                }
                if !le(s.mul(a, c), s.mul(b, c)) {
                    return Err(Error::NotCompatible {
                        a,
                        b,
                        c,
                        side: CompatSide::Right,
                    });
                }
            }
        }
    }
    Ok(())
}

impl OrderedSemigroup {
    /// Validates a table and an order given as a pair list.
    ///
    /// Reflexive pairs are implied. Transitivity is *not* completed; pass the
    /// pairs through [`close_order`] first to opt into that.
    pub fn new(size: usize, rows: Vec<Vec<usize>>, order: &[(usize, usize)]) -> Result<Self> {
        let table = flatten_table(size, rows)?;
        let leq = order_matrix(size, order)?;
        if let Some((i, j, k)) = first_non_associative(size, &table) {
            return Err(Error::NotAssociative(i, j, k));
        }
        let semigroup = FiniteSemigroup {
            size,
            table,
            names: None,
        };
        Self::from_parts(semigroup, leq)
    }

    /// Attaches a flat `n x n` order matrix to an already valid semigroup.
    pub fn from_parts(semigroup: FiniteSemigroup, leq: Vec<bool>) -> Result<Self> {
        let n = semigroup.size;
        if leq.len() != n * n {
            return Err(Error::TableShape {
                size: n,
                rows: leq.len() / n,
                row: leq.len() / n,
                cols: leq.len() % n,
            });
        }
        check_order(&semigroup, &leq)?;
        Ok(OrderedSemigroup { semigroup, leq })
    }

    /// Skips validation; callers guarantee the axioms by construction.
    pub(crate) fn from_parts_unchecked(semigroup: FiniteSemigroup, leq: Vec<bool>) -> Self {
        debug_assert_eq!(leq.len(), semigroup.size * semigroup.size);
        OrderedSemigroup { semigroup, leq }
    }

    /// The semigroup with the discrete (equality) order.
    pub fn discrete(semigroup: FiniteSemigroup) -> Self {
        let n = semigroup.size;
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        OrderedSemigroup { semigroup, leq }
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        self.semigroup = self.semigroup.with_names(names);
        self
    }

    pub fn size(&self) -> usize {
        self.semigroup.size
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.semigroup.mul(a, b)
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.semigroup.size + b]
    }

    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.semigroup
    }

    pub fn names(&self) -> Option<&[String]> {
        self.semigroup.names()
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.semigroup.rows()
    }

    pub fn leq_matrix(&self) -> &[bool] {
        &self.leq
    }

    /// Non-reflexive order pairs in lexicographic order.
    pub fn order_pairs(&self) -> Vec<(usize, usize)> {
        pairs_of(self.size(), &self.leq)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size()
    }

    pub fn empty_set(&self) -> ElementSet {
        ElementSet::empty(self.size())
    }

    pub fn carrier(&self) -> ElementSet {
        ElementSet::full(self.size())
    }

    pub fn singleton(&self, a: usize) -> ElementSet {
        ElementSet::singleton(self.size(), a)
    }

    /// `(X] = { t : t <= h for some h in X }`.
    pub fn down_closure(&self, x: &ElementSet) -> ElementSet {
        self.check_bound(x);
        let mut out = self.empty_set();
        for h in x.iter() {
            for t in self.elements() {
                if self.leq(t, h) {
                    out.insert(t);
                }
            }
        }
        out
    }

    /// Upward closure `{ x : c <= x for some c in X }`.
    pub fn up_closure(&self, x: &ElementSet) -> ElementSet {
        self.check_bound(x);
        let mut out = self.empty_set();
        for c in x.iter() {
            for t in self.elements() {
                if self.leq(c, t) {
                    out.insert(t);
                }
            }
        }
        out
    }

    /// `A . B = { ab : a in A, b in B }`.
    pub fn set_product(&self, a: &ElementSet, b: &ElementSet) -> ElementSet {
        self.check_bound(a);
        self.check_bound(b);
        let mut out = self.empty_set();
        for x in a.iter() {
            for y in b.iter() {
                out.insert(self.mul(x, y));
            }
        }
        out
    }

    /// `true` when `a <= h` for some `h` produced by `candidates`.
    #[inline]
    pub fn below_some<I: IntoIterator<Item = usize>>(&self, a: usize, candidates: I) -> bool {
        candidates.into_iter().any(|h| self.leq(a, h))
    }

    /// Least `x` with `a <= f(x)`.
    #[inline]
    pub fn least_with<F: Fn(usize) -> usize>(&self, a: usize, f: F) -> Option<usize> {
        self.elements().find(|&x| self.leq(a, f(x)))
    }

    /// Least `(a, b)` for which `a*b` leaves `t`, or `None` if `t` is closed.
    pub fn closure_violation(&self, t: &ElementSet) -> Option<(usize, usize)> {
        for a in t.iter() {
            for b in t.iter() {
                if !t.contains(self.mul(a, b)) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Restricts table and order to a product-closed subset.
    pub fn induced_substructure(&self, t: &ElementSet) -> Result<Substructure> {
        self.check_bound(t);
        if t.is_empty() {
            return Err(Error::EmptySet);
        }
        if let Some((a, b)) = self.closure_violation(t) {
            return Err(Error::NotClosed(a, b));
        }
        let embedding = t.to_vec();
        let m = embedding.len();
        let mut local = vec![usize::MAX; self.size()];
        for (i, &a) in embedding.iter().enumerate() {
            local[a] = i;
        }
        let mut table = Vec::with_capacity(m * m);
        let mut leq = Vec::with_capacity(m * m);
        for &a in &embedding {
            for &b in &embedding {
                table.push(local[self.mul(a, b)]);
                leq.push(self.leq(a, b));
            }
        }
        let names = self
            .names()
            .map(|names| embedding.iter().map(|&a| names[a].clone()).collect());
        let structure = OrderedSemigroup {
            semigroup: FiniteSemigroup {
                size: m,
                table,
                names,
            },
            leq,
        };
        debug_assert!(check_order(&structure.semigroup, &structure.leq).is_ok());
        Ok(Substructure {
            structure,
            embedding,
        })
    }

    /// The left-right dual: same carrier and order, `a * b := b a`.
    pub fn dual(&self) -> OrderedSemigroup {
        let n = self.size();
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = self.mul(b, a);
            }
        }
        OrderedSemigroup {
            semigroup: FiniteSemigroup {
                size: n,
                table,
                names: self.semigroup.names.clone(),
            },
            leq: self.leq.clone(),
        }
    }

    fn check_bound(&self, x: &ElementSet) {
        assert_eq!(
            x.universe(),
            self.size(),
            "set is bound to a different structure"
        );
    }
}

/// Serializable snapshot of a structure, used in reports.
#[derive(Debug, Clone, Serialize)]
pub struct StructureSummary {
    pub size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    pub table: Vec<Vec<usize>>,
    pub order: Vec<(usize, usize)>,
}

impl From<&OrderedSemigroup> for StructureSummary {
    fn from(s: &OrderedSemigroup) -> Self {
        StructureSummary {
            size: s.size(),
            names: s.names().map(<[String]>::to_vec),
            table: s.rows(),
            order: s.order_pairs(),
        }
    }
}
