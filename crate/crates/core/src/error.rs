use thiserror::Error;

/// Which side of a product a compatibility violation was found on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CompatSide {
    /// `a <= b` but `c*a <= c*b` fails.
    Left,
    /// `a <= b` but `a*c <= b*c` fails.
    Right,
}

impl std::fmt::Display for CompatSide {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CompatSide::Left => f.write_str("left"),
            CompatSide::Right => f.write_str("right"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("carrier must contain at least one element")]
    EmptyCarrier,
    #[error("table has {rows} rows / row {row} has {cols} entries, expected {size}")]
    TableShape {
        size: usize,
        rows: usize,
        row: usize,
        cols: usize,
    },
    #[error("table entry ({row},{col}) = {value} is out of range")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
    },
    #[error("order pair ({0},{1}) references an element out of range")]
    OrderOutOfRange(usize, usize),
    #[error("not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("order is not reflexive at {0}")]
    NotReflexive(usize),
    #[error("order is not antisymmetric: {0} <= {1} and {1} <= {0}")]
    NotAntisymmetric(usize, usize),
    #[error("order is not transitive: {0} <= {1} <= {2} but not {0} <= {2}")]
    NotTransitive(usize, usize, usize),
    #[error("order is not compatible ({side}): {a} <= {b} fails to survive multiplication by {c}")]
    NotCompatible {
        a: usize,
        b: usize,
        c: usize,
        side: CompatSide,
    },
    #[error("subset is not closed: {0}*{1} leaves it")]
    NotClosed(usize, usize),
    #[error("set is empty")]
    EmptySet,
    #[error("set belongs to a carrier of size {found}, expected {expected}")]
    UniverseMismatch { expected: usize, found: usize },
    #[error("element {0} is out of range")]
    ElementOutOfRange(usize),
    #[error("size {size} exceeds the {what} limit of {limit} (override with ORDSGP_LIMITS)")]
    SizeLimit {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("structure is not regular")]
    NotRegular,
    #[error("element {0} is not an ordered idempotent")]
    NotIdempotent(usize),
    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),
    #[error("unknown bundle `{0}`")]
    UnknownBundle(String),
    #[error("unknown theorem id `{0}`")]
    UnknownId(String),
    #[error("`{0}` does not apply: its premise fails on this structure")]
    NotApplicable(String),
    #[error("labels do not form a partition of a carrier of size {0}")]
    NotPartition(usize),
    #[error("relation is not a complete semilattice congruence")]
    NotCompleteSemilattice,
    #[error("classes {0} and {1} multiply into more than one class")]
    NotClosedClass(usize, usize),
    #[error("elements {0} and {1} have no join")]
    NoJoin(usize, usize),
    #[error("not a morphism: {0}")]
    NotMorphism(String),
    #[error("invalid resume token `{0}`")]
    BadResumeToken(String),
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("cannot read {path}: {message}")]
    Read { path: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
