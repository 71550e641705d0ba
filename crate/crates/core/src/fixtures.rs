//! Small named structures used throughout the tests, examples and docs.

use crate::structure::{FiniteSemigroup, OrderedSemigroup};

fn ordered(rows: Vec<Vec<usize>>, order: &[(usize, usize)]) -> OrderedSemigroup {
    OrderedSemigroup::new(rows.len(), rows, order).expect("fixture is valid")
}

fn plain(rows: Vec<Vec<usize>>) -> FiniteSemigroup {
    FiniteSemigroup::new(rows.len(), rows).expect("fixture is valid")
}

/// One-element structure.
pub fn t1() -> OrderedSemigroup {
    ordered(vec![vec![0]], &[])
}

/// Two-element chain `0 < 1` under `min`.
pub fn sl2() -> OrderedSemigroup {
    ordered(vec![vec![0, 0], vec![0, 1]], &[(0, 1)])
}

/// Two left zeros (`xy = x`), discrete order.
pub fn lz2() -> OrderedSemigroup {
    OrderedSemigroup::discrete(left_zero2())
}

/// Two right zeros (`xy = y`), discrete order.
pub fn rz2() -> OrderedSemigroup {
    lz2().dual()
}

/// Null semigroup on two elements (`xy = 0`), discrete order.
pub fn null2() -> OrderedSemigroup {
    OrderedSemigroup::discrete(null_semigroup2())
}

/// Finite-subset power structure of the two-element group:
/// `A = {0}`, `B = {1}`, `C = {0,1}` ordered by inclusion.
pub fn pz2() -> OrderedSemigroup {
    ordered(
        vec![vec![0, 1, 2], vec![1, 0, 2], vec![2, 2, 2]],
        &[(0, 2), (1, 2)],
    )
}

/// Three-element chain `0 < 1 < 2` under `min`.
pub fn chain3() -> OrderedSemigroup {
    ordered(
        vec![vec![0, 0, 0], vec![0, 1, 1], vec![0, 1, 2]],
        &[(0, 1), (0, 2), (1, 2)],
    )
}

/// The cyclic group of order two, `0` the identity.
pub fn z2() -> FiniteSemigroup {
    plain(vec![vec![0, 1], vec![1, 0]])
}

pub fn left_zero2() -> FiniteSemigroup {
    plain(vec![vec![0, 0], vec![1, 1]])
}

pub fn null_semigroup2() -> FiniteSemigroup {
    plain(vec![vec![0, 0], vec![0, 0]])
}

pub fn trivial() -> FiniteSemigroup {
    plain(vec![vec![0]])
}

/// Every named ordered fixture with its label.
pub fn all() -> Vec<(&'static str, OrderedSemigroup)> {
    vec![
        ("T1", t1()),
        ("SL2", sl2()),
        ("LZ2", lz2()),
        ("RZ2", rz2()),
        ("NULL2", null2()),
        ("PZ2", pz2()),
        ("CHAIN3", chain3()),
        ("Z2", OrderedSemigroup::discrete(z2())),
    ]
}
