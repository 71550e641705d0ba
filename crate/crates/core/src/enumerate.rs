//! Exhaustive generation of small labeled semigroups, posets and ordered
//! semigroups.
//!
//! Tables are produced in lexicographic order of their row-major entries,
//! posets in the order of [`enumerate_posets`], and ordered semigroups as the
//! product of the two. That order is the documented canonical sequence; resume
//! tokens name a position in it.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::limits::{guard, limits};
use crate::structure::{FiniteSemigroup, OrderedSemigroup};

const UNSET: usize = usize::MAX;

/// Depth-first search over partial Cayley tables with associativity pruning.
#[derive(Debug, Clone)]
pub struct SemigroupStream {
    n: usize,
    table: Vec<usize>,
    /// Cells already fixed.
    pos: usize,
    /// Cells below this index are never revisited.
    floor: usize,
    state: StreamState,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum StreamState {
    Fresh,
    Yielded,
    Done,
}

impl SemigroupStream {
    fn with_prefix(n: usize, prefix: &[usize]) -> Self {
        let mut table = vec![UNSET; n * n];
        table[..prefix.len()].copy_from_slice(prefix);
        let viable = prefix.iter().all(|&v| v < n) && consistent(n, &table);
        SemigroupStream {
            n,
            table,
            pos: prefix.len(),
            floor: prefix.len(),
            state: if viable {
                StreamState::Fresh
            } else {
                StreamState::Done
            },
        }
    }

    /// Tables whose first row is `row`.
    pub fn with_first_row(n: usize, row: &[usize]) -> Result<Self> {
        guard("enumerate", n, limits().enumerate)?;
        assert_eq!(row.len(), n);
        Ok(Self::with_prefix(n, row))
    }

    /// Continues strictly after `table`; restricted to tables sharing its first
    /// `floor` cells.
    fn resume_after(n: usize, table: &[usize], floor: usize) -> Self {
        let mut s = Self::with_prefix(n, &table[..floor]);
        if s.state == StreamState::Done {
            return s;
        }
        s.table.copy_from_slice(table);
        s.pos = n * n;
        s.state = StreamState::Yielded;
        s
    }

    /// Advances to the next complete associative table.
    fn advance(&mut self) -> bool {
        let total = self.n * self.n;
        match self.state {
            StreamState::Done => return false,
            StreamState::Fresh if self.pos == total => {
                self.state = StreamState::Yielded;
                return true;
            }
            StreamState::Yielded if self.floor == total => {
                self.state = StreamState::Done;
                return false;
            }
            StreamState::Yielded => self.pos -= 1,
            StreamState::Fresh => {}
        }
        loop {
            let cell = self.pos;
            let start = if self.table[cell] == UNSET {
                0
            } else {
                self.table[cell] + 1
            };
            let mut found = false;
            for v in start..self.n {
                self.table[cell] = v;
                if consistent(self.n, &self.table) {
                    found = true;
                    break;
                }
            }
            if found {
                self.pos += 1;
                if self.pos == total {
                    self.state = StreamState::Yielded;
                    return true;
                }
            } else {
                self.table[cell] = UNSET;
                if cell == self.floor {
                    self.state = StreamState::Done;
                    return false;
                }
                self.pos -= 1;
            }
        }
    }
}

/// Associativity on every triple whose four lookups are already defined.
fn consistent(n: usize, t: &[usize]) -> bool {
    for i in 0..n {
        for j in 0..n {
            let ij = t[i * n + j];
            if ij == UNSET {
                continue;
            }
            for k in 0..n {
                let jk = t[j * n + k];
                if jk == UNSET {
                    continue;
                }
                let left = t[ij * n + k];
                let right = t[i * n + jk];
                if left != UNSET && right != UNSET && left != right {
                    return false;
                }
            }
        }
    }
    true
}

impl Iterator for SemigroupStream {
    type Item = FiniteSemigroup;

    fn next(&mut self) -> Option<FiniteSemigroup> {
        if self.advance() {
            Some(FiniteSemigroup::from_flat_unchecked(
                self.n,
                self.table.clone(),
            ))
        } else {
            None
        }
    }
}

/// All associative tables on `n` labeled elements.
pub fn enumerate_semigroups(n: usize) -> Result<SemigroupStream> {
    guard("enumerate", n, limits().enumerate)?;
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    Ok(SemigroupStream::with_prefix(n, &[]))
}

/// Every table over `0..n` filtered by a full associativity check; the
/// unpruned reference for [`enumerate_semigroups`].
pub fn naive_semigroups(n: usize) -> Vec<FiniteSemigroup> {
    (0..n * n)
        .map(|_| 0..n)
        .multi_cartesian_product()
        .filter_map(|t| FiniteSemigroup::from_flat(n, t).ok())
        .collect()
}

/// All partial orders on `0..n` as flat `n x n` matrices.
///
/// Each unordered pair `i < j` takes one of three states (incomparable,
/// `i < j`, `j < i`); states are varied in lexicographic order over the pairs,
/// so the discrete order comes first.
pub fn enumerate_posets(n: usize) -> Result<Vec<Vec<bool>>> {
    guard("orders", n, limits().orders)?;
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let mut out = Vec::new();
    let mut states = vec![0u8; pairs.len()];
    loop {
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (&(i, j), &st) in pairs.iter().zip(&states) {
            match st {
                1 => leq[i * n + j] = true,
                2 => leq[j * n + i] = true,
                _ => {}
            }
        }
        let transitive = (0..n).all(|a| {
            (0..n).all(|b| !leq[a * n + b] || (0..n).all(|c| !leq[b * n + c] || leq[a * n + c]))
        });
        if transitive {
            out.push(leq);
        }
        let Some(p) = (0..states.len()).rev().find(|&p| states[p] < 2) else {
            return Ok(out);
        };
        states[p] += 1;
        states[p + 1..].iter_mut().for_each(|s| *s = 0);
    }
}

fn compatible(f: &FiniteSemigroup, leq: &[bool]) -> bool {
    let n = f.size();
    (0..n).all(|a| {
        (0..n).all(|b| {
            a == b
                || !leq[a * n + b]
                || (0..n).all(|c| {
                    leq[f.mul(c, a) * n + f.mul(c, b)] && leq[f.mul(a, c) * n + f.mul(b, c)]
                })
        })
    })
}

/// All partial orders compatible with the table of `f`, discrete order first.
pub fn enumerate_compatible_orders(f: &FiniteSemigroup) -> Result<Vec<Vec<bool>>> {
    Ok(enumerate_posets(f.size())?
        .into_iter()
        .filter(|leq| compatible(f, leq))
        .collect())
}

/// Position in the ordered-semigroup sequence: a table and an order index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResumeToken {
    pub n: usize,
    pub table: Vec<usize>,
    pub order_index: usize,
}

impl fmt::Display for ResumeToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "osg{}:{}:{}",
            self.n,
            self.table.iter().join("."),
            self.order_index
        )
    }
}

impl FromStr for ResumeToken {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadResumeToken(s.to_string());
        let rest = s.strip_prefix("osg").ok_or_else(bad)?;
        let mut parts = rest.split(':');
        let (Some(n), Some(table), Some(idx), None) =
            (parts.next(), parts.next(), parts.next(), parts.next())
        else {
            return Err(bad());
        };
        let n: usize = n.parse().map_err(|_| bad())?;
        let table: Vec<usize> = table
            .split('.')
            .map(|v| v.parse::<usize>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        let order_index = idx.parse().map_err(|_| bad())?;
        if n == 0 || table.len() != n * n || table.iter().any(|&v| v >= n) {
            return Err(bad());
        }
        if FiniteSemigroup::from_flat(n, table.clone()).is_err() {
            return Err(bad());
        }
        Ok(ResumeToken {
            n,
            table,
            order_index,
        })
    }
}

impl ResumeToken {
    /// Token naming `s` in the canonical sequence.
    pub fn for_structure(s: &OrderedSemigroup) -> Result<Self> {
        let f = s.semigroup();
        let order_index = enumerate_compatible_orders(f)?
            .iter()
            .position(|leq| leq.as_slice() == s.leq_matrix())
            .expect("a valid order is compatible");
        Ok(ResumeToken {
            n: s.size(),
            table: f.flat_table().to_vec(),
            order_index,
        })
    }
}

/// Ordered semigroups on `n` labeled elements: every table paired with each
/// of its compatible orders.
#[derive(Debug, Clone)]
pub struct OrderedStream {
    tables: SemigroupStream,
    posets: Vec<Vec<bool>>,
    current: Option<(FiniteSemigroup, Vec<usize>)>,
    /// Next order to try for `current`, as an index into `posets`.
    next_order: usize,
    /// Position among the compatible orders of `current`.
    order_rank: usize,
}

impl OrderedStream {
    fn from_tables(n: usize, tables: SemigroupStream) -> Result<Self> {
        Ok(OrderedStream {
            tables,
            posets: enumerate_posets(n)?,
            current: None,
            next_order: 0,
            order_rank: 0,
        })
    }

    /// Restricts to tables with the given first row.
    pub fn with_first_row(n: usize, row: &[usize]) -> Result<Self> {
        Self::from_tables(n, SemigroupStream::with_first_row(n, row)?)
    }

    /// Continues strictly after the structure named by `token`.
    pub fn resume(token: &ResumeToken) -> Result<Self> {
        Self::resume_within(token, 0)
    }

    fn resume_within(token: &ResumeToken, floor: usize) -> Result<Self> {
        let n = token.n;
        guard("enumerate", n, limits().enumerate)?;
        let tables = SemigroupStream::resume_after(n, &token.table, floor);
        let mut stream = Self::from_tables(n, tables)?;
        let f = FiniteSemigroup::from_flat_unchecked(n, token.table.clone());
        let compatible_at: Vec<usize> = (0..stream.posets.len())
            .filter(|&i| compatible(&f, &stream.posets[i]))
            .collect();
        if token.order_index >= compatible_at.len() {
            return Err(Error::BadResumeToken(token.to_string()));
        }
        stream.next_order = compatible_at[token.order_index] + 1;
        stream.order_rank = token.order_index + 1;
        stream.current = Some((f, token.table.clone()));
        Ok(stream)
    }

    /// Token naming the structure most recently yielded.
    pub fn token(&self) -> Option<ResumeToken> {
        let (f, table) = self.current.as_ref()?;
        Some(ResumeToken {
            n: f.size(),
            table: table.clone(),
            order_index: self.order_rank.checked_sub(1)?,
        })
    }
}

impl Iterator for OrderedStream {
    type Item = OrderedSemigroup;

    fn next(&mut self) -> Option<OrderedSemigroup> {
        loop {
            if let Some((f, _)) = &self.current {
                while self.next_order < self.posets.len() {
                    let i = self.next_order;
                    self.next_order += 1;
                    if compatible(f, &self.posets[i]) {
                        self.order_rank += 1;
                        return Some(OrderedSemigroup::from_parts_unchecked(
                            f.clone(),
                            self.posets[i].clone(),
                        ));
                    }
                }
            }
            let f = self.tables.next()?;
            let table = f.flat_table().to_vec();
            self.current = Some((f, table));
            self.next_order = 0;
            self.order_rank = 0;
        }
    }
}

/// The full ordered-semigroup sequence on `n` labeled elements.
pub fn enumerate_ordered_semigroups(n: usize) -> Result<OrderedStream> {
    OrderedStream::from_tables(n, enumerate_semigroups(n)?)
}

/// First rows that start at least one table, in lexicographic order.
pub fn first_rows(n: usize) -> Vec<Vec<usize>> {
    (0..n)
        .map(|_| 0..n)
        .multi_cartesian_product()
        .filter(|row| SemigroupStream::with_prefix(n, row).state != StreamState::Done)
        .collect()
}

/// Applies `visit` to every ordered semigroup on `n` elements using
/// `workers` threads, one first row per task.
///
/// Results come back in the canonical sequence whatever the worker count,
/// because first rows are the most significant part of that order.
pub fn sweep<T, F>(
    n: usize,
    workers: usize,
    resume: Option<&ResumeToken>,
    visit: F,
) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&OrderedSemigroup) -> T + Sync,
{
    guard("enumerate", n, limits().enumerate)?;
    if let Some(t) = resume {
        if t.n != n {
            return Err(Error::BadResumeToken(t.to_string()));
        }
    }
    let rows: Vec<Vec<usize>> = first_rows(n)
        .into_iter()
        .filter(|row| resume.is_none_or(|t| row.as_slice() >= &t.table[..n]))
        .collect();
    let task = |row: &Vec<usize>| -> Result<Vec<T>> {
        let stream = match resume {
            Some(t) if row.as_slice() == &t.table[..n] => OrderedStream::resume_within(t, n)?,
            _ => OrderedStream::with_first_row(n, row)?,
        };
        Ok(stream.map(|s| visit(&s)).collect())
    };
    let chunks: Vec<Result<Vec<T>>> = if workers <= 1 {
        rows.iter().map(task).collect()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("thread pool")
            .install(|| rows.par_iter().map(task).collect())
    };
    let mut out = Vec::new();
    for chunk in chunks {
        out.extend(chunk?);
    }
    Ok(out)
}

/// One transcript line: the flat table, then the non-reflexive order pairs.
pub fn transcript_line(s: &OrderedSemigroup) -> String {
    format!(
        "{}|{}",
        s.semigroup().flat_table().iter().join(","),
        s.order_pairs()
            .iter()
            .map(|(a, b)| format!("{a}<{b}"))
            .join(",")
    )
}

/// SHA-256 over the transcript lines, newline terminated, as lowercase hex.
pub fn transcript_hash<'a, I: IntoIterator<Item = &'a str>>(lines: I) -> String {
    let mut hasher = Sha256::new();
    for line in lines {
        hasher.update(line.as_bytes());
        hasher.update(b"\n");
    }
    hex::encode(hasher.finalize())
}

/// Transcript hash of the whole ordered-semigroup sequence on `n` elements.
pub fn enumeration_hash(n: usize, workers: usize) -> Result<String> {
    let lines = sweep(n, workers, None, transcript_line)?;
    Ok(transcript_hash(lines.iter().map(String::as_str)))
}

/// Least relabeling of `s` under all carrier permutations, compared on
/// the flat table and then the flat order matrix.
pub fn canonical_form(s: &OrderedSemigroup) -> (Vec<usize>, Vec<bool>) {
    let n = s.size();
    (0..n)
        .permutations(n)
        .map(|p| {
            // p[old] = new
            let mut inv = vec![0; n];
            for (old, &new) in p.iter().enumerate() {
                inv[new] = old;
            }
            let table: Vec<usize> = (0..n * n)
                .map(|c| p[s.mul(inv[c / n], inv[c % n])])
                .collect();
            let leq: Vec<bool> = (0..n * n).map(|c| s.leq(inv[c / n], inv[c % n])).collect();
            (table, leq)
        })
        .min()
        .expect("at least one permutation")
}

/// Number of isomorphism classes among the given structures.
pub fn count_isomorphism_classes<'a, I: IntoIterator<Item = &'a OrderedSemigroup>>(
    items: I,
) -> usize {
    items
        .into_iter()
        .map(canonical_form)
        .collect::<std::collections::BTreeSet<_>>()
        .len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    #[test]
    fn semigroup_counts() {
        let counts: Vec<usize> = (1..=3)
            .map(|n| enumerate_semigroups(n).unwrap().count())
            .collect();
        assert_eq!(counts, vec![1, 8, 113]);
    }

    #[test]
    fn pruned_search_matches_naive_scan() {
        for n in 1..=2 {
            let fast: Vec<_> = enumerate_semigroups(n).unwrap().collect();
            assert_eq!(fast, naive_semigroups(n));
        }
    }

    #[test]
    fn poset_counts() {
        let counts: Vec<usize> = (1..=4)
            .map(|n| enumerate_posets(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 3, 19, 219]);
        let discrete = &enumerate_posets(3).unwrap()[0];
        assert_eq!(discrete.iter().filter(|&&b| b).count(), 3);
    }

    #[test]
    fn compatible_order_examples() {
        assert_eq!(enumerate_compatible_orders(&trivial()).unwrap().len(), 1);
        assert_eq!(enumerate_compatible_orders(&left_zero2()).unwrap().len(), 3);
        let min = FiniteSemigroup::new(2, vec![vec![0, 0], vec![0, 1]]).unwrap();
        assert_eq!(enumerate_compatible_orders(&min).unwrap().len(), 3);
        assert_eq!(enumerate_compatible_orders(&z2()).unwrap().len(), 1);
    }

    #[test]
    fn resume_continues_after_token() {
        let all: Vec<_> = enumerate_ordered_semigroups(2).unwrap().collect();
        let mut stream = enumerate_ordered_semigroups(2).unwrap();
        for _ in 0..5 {
            stream.next();
        }
        let token = stream.token().unwrap();
        let parsed: ResumeToken = token.to_string().parse().unwrap();
        assert_eq!(parsed, token);
        let rest: Vec<_> = OrderedStream::resume(&parsed).unwrap().collect();
        assert_eq!(rest, all[5..]);
        assert_eq!(ResumeToken::for_structure(&all[4]).unwrap(), token);
    }

    #[test]
    fn bad_tokens() {
        for t in [
            "",
            "osg2:0.0.0:0",
            "osg2:1.0.0.0:0",
            "osg2:0.0.0.0",
            "x2:0.0.0.0:0",
        ] {
            assert!(
                matches!(t.parse::<ResumeToken>(), Err(Error::BadResumeToken(_))),
                "{t}"
            );
        }
    }

    #[test]
    fn worker_count_does_not_change_the_sequence() {
        let single = sweep(3, 1, None, transcript_line).unwrap();
        let multi = sweep(3, 4, None, transcript_line).unwrap();
        assert_eq!(single, multi);
        let direct: Vec<String> = enumerate_ordered_semigroups(3)
            .unwrap()
            .map(|s| transcript_line(&s))
            .collect();
        assert_eq!(single, direct);
    }

    #[test]
    fn discrete_isomorphism_classes() {
        let discrete: Vec<OrderedSemigroup> = (1..=3)
            .flat_map(|n| {
                enumerate_semigroups(n)
                    .unwrap()
                    .map(OrderedSemigroup::discrete)
            })
            .collect();
        let by_size =
            |n: usize| count_isomorphism_classes(discrete.iter().filter(|s| s.size() == n));
        assert_eq!((by_size(1), by_size(2), by_size(3)), (1, 5, 24));
    }
}
