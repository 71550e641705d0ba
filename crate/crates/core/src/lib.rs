//! Finite ordered semigroups: ideals, Green's relations, regularity classes,
//! complete semilattice decompositions and the finite power construction.

pub mod classify;
pub mod decomposition;
pub mod elements;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod ideals;
pub mod io;
pub mod limits;
pub mod power;
pub mod relation;
pub mod report;
pub mod set;
pub mod structure;
pub mod verdict;

pub use error::{Error, Result};
pub use relation::EquivalenceRelation;
pub use set::ElementSet;
pub use structure::{FiniteSemigroup, OrderedSemigroup};
pub use verdict::{BundleResult, Verdict};
