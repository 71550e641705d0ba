//! Congruence predicates, the least complete semilattice congruence and
//! complete semilattice decompositions.

use serde::Serialize;

use crate::classify::clifford;
use crate::classify::{
    classify_predicates, completely_regular, completely_simple, group_like, h_classes_group_like,
    left_clifford, left_group_like, regular, ClassificationReport,
};
use crate::error::{Error, Result};
use crate::ideals::{green_relation, n_relation, Green};
use crate::limits::{guard, limits};
use crate::relation::EquivalenceRelation;
use crate::structure::OrderedSemigroup;
use crate::verdict::{cond, BundleKind, BundleResult, Verdict};

/// Registered structure-theorem identifiers.
pub const THEOREMS: [&str; 6] = [
    "CR-LEASTCSC",
    "CR-CSDECOMP",
    "CR-HCLASS-GL",
    "CL-DECOMP",
    "LCL-LEASTCSC",
    "LCL-DECOMP",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationProperties {
    /// `a ρ b` implies `ca ρ cb`; counterexample `(a, b, c)`.
    pub left_congruence: Verdict,
    /// `a ρ b` implies `ac ρ bc`; counterexample `(a, b, c)`.
    pub right_congruence: Verdict,
    pub congruence: Verdict,
    /// Congruence with `a ρ a²` and `ab ρ ba`.
    pub semilattice: Verdict,
    /// Semilattice congruence with `a <= b` implying `a ρ ab`.
    pub complete_semilattice: Verdict,
}

fn check_universe(s: &OrderedSemigroup, rho: &EquivalenceRelation) -> Result<()> {
    if rho.universe() != s.size() {
        Err(Error::NotPartition(s.size()))
    } else {
        Ok(())
    }
}

fn translation_counterexample(
    s: &OrderedSemigroup,
    rho: &EquivalenceRelation,
    left: bool,
) -> Option<Vec<usize>> {
    for a in s.elements() {
        for b in s.elements() {
            if a == b || !rho.related(a, b) {
                continue;
            }
            for c in s.elements() {
                let (x, y) = if left {
                    (s.mul(c, a), s.mul(c, b))
                } else {
                    (s.mul(a, c), s.mul(b, c))
                };
                if !rho.related(x, y) {
                    return Some(vec![a, b, c]);
                }
            }
        }
    }
    None
}

pub fn relation_properties(
    s: &OrderedSemigroup,
    rho: &EquivalenceRelation,
) -> Result<RelationProperties> {
    check_universe(s, rho)?;
    let left = Verdict::from_counterexample(translation_counterexample(s, rho, true));
    let right = Verdict::from_counterexample(translation_counterexample(s, rho, false));
    let congruence = left.clone().and(|| right.clone());
    let semilattice = congruence.clone().and(|| {
        let square = s
            .elements()
            .find(|&a| !rho.related(a, s.mul(a, a)))
            .map(|a| vec![a]);
        let commute = || {
            s.elements()
                .flat_map(|a| s.elements().map(move |b| (a, b)))
                .find(|&(a, b)| !rho.related(s.mul(a, b), s.mul(b, a)))
                .map(|(a, b)| vec![a, b])
        };
        Verdict::from_counterexample(square.or_else(commute))
    });
    let complete_semilattice = semilattice.clone().and(|| {
        Verdict::from_counterexample(
            s.elements()
                .flat_map(|a| s.elements().map(move |b| (a, b)))
                .find(|&(a, b)| s.leq(a, b) && !rho.related(a, s.mul(a, b)))
                .map(|(a, b)| vec![a, b]),
        )
    });
    Ok(RelationProperties {
        left_congruence: left,
        right_congruence: right,
        congruence,
        semilattice,
        complete_semilattice,
    })
}

/// The least complete semilattice congruence, computed through principal filters.
pub fn least_csc(s: &OrderedSemigroup) -> EquivalenceRelation {
    n_relation(s)
}

/// All set partitions of `0..n` as restricted-growth strings, in lexicographic order.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Vec<usize>,
    maxima: Vec<usize>,
    done: bool,
}

impl Partitions {
    pub fn new(n: usize) -> Self {
        Partitions {
            current: vec![0; n],
            maxima: vec![0; n],
            done: n == 0,
        }
    }
}

impl Iterator for Partitions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let n = self.current.len();
        // maxima[i] = max(current[..i]); position i may grow up to maxima[i] + 1.
        let mut i = n;
        loop {
            if i <= 1 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.current[i] <= self.maxima[i] {
                self.current[i] += 1;
                for j in i + 1..n {
                    self.current[j] = 0;
                    self.maxima[j] = self.maxima[j - 1].max(self.current[j - 1]);
                }
                break;
            }
        }
        Some(out)
    }
}

/// Every complete semilattice congruence, found by scanning all partitions.
pub fn complete_semilattice_congruences(s: &OrderedSemigroup) -> Result<Vec<EquivalenceRelation>> {
    guard("partitions", s.size(), limits().partitions)?;
    Ok(Partitions::new(s.size())
        .map(|labels| EquivalenceRelation::from_labels(s.size(), &labels).expect("valid labels"))
        .filter(|rho| {
            relation_properties(s, rho)
                .expect("same carrier")
                .complete_semilattice
                .holds
        })
        .collect())
}

/// A complete semilattice `Y` of subsemigroups `S_α`.
#[derive(Debug, Clone, Serialize)]
pub struct Decomposition {
    pub rho: EquivalenceRelation,
    pub classes: Vec<Vec<usize>>,
    pub quotient_size: usize,
    /// Product on class ids.
    pub quotient_table: Vec<Vec<usize>>,
    /// `(α, β)` with `αβ = α`, non-reflexive pairs only.
    pub quotient_order: Vec<(usize, usize)>,
    pub order_is_partial_order: bool,
    /// Disjointness, cover, `S_α S_β ⊆ S_{αβ}`, and
    /// `S_β ∩ (S_α] ≠ ∅ ⟹ β ⪯ α`.
    pub condition_verdicts: [Verdict; 4],
    /// Predicate verdicts of each class as an ordered semigroup in its own right.
    pub class_types: Vec<ClassificationReport>,
}

impl Decomposition {
    pub fn conditions_hold(&self) -> bool {
        self.condition_verdicts.iter().all(|v| v.holds)
    }

    pub fn all_classes(&self, predicate: &str) -> bool {
        self.class_types.iter().all(|r| r.is(predicate))
    }
}

pub fn decompose(s: &OrderedSemigroup, rho: &EquivalenceRelation) -> Result<Decomposition> {
    check_universe(s, rho)?;
    let m = rho.num_classes();
    let classes = rho.classes();
    let mut table = vec![vec![0; m]; m];
    for (alpha, sa) in classes.iter().enumerate() {
        for (beta, sb) in classes.iter().enumerate() {
            let product = s.set_product(sa, sb);
            let mut ids = product.iter().map(|x| rho.class_id(x));
            let first = ids.next().expect("classes are nonempty");
            if ids.any(|id| id != first) {
                return Err(Error::NotClosedClass(alpha, beta));
            }
            table[alpha][beta] = first;
        }
    }
    if !relation_properties(s, rho)?.complete_semilattice.holds {
        return Err(Error::NotCompleteSemilattice);
    }
    let preceq = |a: usize, b: usize| table[a][b] == a;
    let mut quotient_order = Vec::new();
    let mut antisymmetric = true;
    let mut reflexive = true;
    let mut transitive = true;
    for a in 0..m {
        reflexive &= preceq(a, a);
        for b in 0..m {
            if a != b && preceq(a, b) {
                quotient_order.push((a, b));
                antisymmetric &= !preceq(b, a);
            }
            for c in 0..m {
                transitive &= !(preceq(a, b) && preceq(b, c)) || preceq(a, c);
            }
        }
    }

    let mut disjoint = Verdict::yes();
    'd: for a in 0..m {
        for b in a + 1..m {
            if !classes[a].is_disjoint(&classes[b]) {
                disjoint = Verdict::fails_at(vec![a, b]);
                break 'd;
            }
        }
    }
    let mut union = s.empty_set();
    for c in classes {
        union.union_with(c);
    }
    let cover =
        Verdict::from_counterexample(s.elements().find(|&x| !union.contains(x)).map(|x| vec![x]));
    let mut product = Verdict::yes();
    let mut downward = Verdict::yes();
    for a in 0..m {
        let below_a = s.down_closure(&classes[a]);
        for b in 0..m {
            if product.holds
                && !s
                    .set_product(&classes[a], &classes[b])
                    .is_subset(&classes[table[a][b]])
            {
                product = Verdict::fails_at(vec![a, b]);
            }
            if downward.holds && !classes[b].is_disjoint(&below_a) && !preceq(b, a) {
                downward = Verdict::fails_at(vec![b, a]);
            }
        }
    }
    let class_types = classes
        .iter()
        .map(|c| {
            let sub = s
                .induced_substructure(c)
                .expect("classes of a congruence with a ρ a² are closed");
            classify_predicates(&sub.structure)
        })
        .collect();
    Ok(Decomposition {
        rho: rho.clone(),
        classes: classes.iter().map(|c| c.to_vec()).collect(),
        quotient_size: m,
        quotient_table: table,
        quotient_order,
        order_is_partial_order: reflexive && antisymmetric && transitive,
        condition_verdicts: [disjoint, cover, product, downward],
        class_types,
    })
}

// ---------------------------------------------------------------------------
// structure theorems

/// Every class of `rho` is a subsemigroup satisfying `good` as a structure of its own.
fn classes_satisfy(
    s: &OrderedSemigroup,
    rho: &EquivalenceRelation,
    good: impl Fn(&OrderedSemigroup) -> bool,
) -> Verdict {
    for (id, class) in rho.classes().iter().enumerate() {
        match s.induced_substructure(class) {
            Ok(sub) if good(&sub.structure) => {}
            _ => return Verdict::fails_at(vec![id]),
        }
    }
    Verdict::yes()
}

fn is_csc(s: &OrderedSemigroup, rho: &EquivalenceRelation) -> Verdict {
    relation_properties(s, rho)
        .expect("same carrier")
        .complete_semilattice
}

fn equals(a: &EquivalenceRelation, b: &EquivalenceRelation) -> Verdict {
    Verdict::from_counterexample(
        a.first_pair_outside(b)
            .or_else(|| b.first_pair_outside(a))
            .map(|(x, y)| vec![x, y]),
    )
}

/// Complete semilattice congruences when the carrier is small enough to scan.
fn scanned(s: &OrderedSemigroup) -> Option<Vec<EquivalenceRelation>> {
    complete_semilattice_congruences(s).ok()
}

fn exists_decomposition(
    cscs: &[EquivalenceRelation],
    s: &OrderedSemigroup,
    good: impl Fn(&OrderedSemigroup) -> bool,
) -> Verdict {
    match cscs
        .iter()
        .position(|rho| classes_satisfy(s, rho, &good).holds)
    {
        Some(i) => Verdict::holds_with(cscs[i].labels().to_vec()),
        None => Verdict::no(),
    }
}

/// Least-ness of `rho` among the scanned complete semilattice congruences.
fn least_among(rho: &EquivalenceRelation, cscs: &[EquivalenceRelation]) -> Verdict {
    Verdict::from_counterexample(
        cscs.iter()
            .find(|sigma| !rho.is_finer_than(sigma))
            .map(|sigma| sigma.labels().to_vec()),
    )
}

const SCAN_SKIPPED: &str = "partition scan";

fn cr_leastcsc(s: &OrderedSemigroup) -> Result<BundleResult> {
    if !completely_regular(s).holds {
        return Err(Error::NotApplicable("CR-LEASTCSC".into()));
    }
    let j = green_relation(s, Green::J);
    let mut conditions = vec![
        cond("J is a complete semilattice congruence", 0, is_csc(s, &j)),
        cond(
            "J equals the filter relation N",
            0,
            equals(&j, &least_csc(s)),
        ),
    ];
    let mut skipped = Vec::new();
    match scanned(s) {
        Some(cscs) => conditions.push(cond(
            "J is contained in every complete semilattice congruence",
            0,
            least_among(&j, &cscs),
        )),
        None => skipped.push(SCAN_SKIPPED.to_string()),
    }
    Ok(BundleResult::with_skipped(
        "CR-LEASTCSC",
        BundleKind::Identities,
        conditions,
        skipped,
    ))
}

fn decomposition_classes(
    s: &OrderedSemigroup,
    rho: &EquivalenceRelation,
    predicate: &str,
) -> Verdict {
    match decompose(s, rho) {
        Ok(d) if d.conditions_hold() => Verdict::from_counterexample(
            d.class_types
                .iter()
                .position(|r| !r.is(predicate))
                .map(|i| vec![i]),
        ),
        _ => Verdict::no(),
    }
}

fn cr_csdecomp(s: &OrderedSemigroup) -> BundleResult {
    let n = least_csc(s);
    let mut conditions = vec![
        cond("S is completely regular", 0, completely_regular(s)),
        cond(
            "the least complete semilattice congruence has completely simple classes",
            0,
            decomposition_classes(s, &n, "completely_simple"),
        ),
    ];
    let mut skipped = Vec::new();
    match scanned(s) {
        Some(cscs) => conditions.push(cond(
            "S is a complete semilattice of completely simple ordered semigroups",
            0,
            exists_decomposition(&cscs, s, |t| completely_simple(t).holds),
        )),
        None => skipped.push(SCAN_SKIPPED.to_string()),
    }
    BundleResult::with_skipped("CR-CSDECOMP", BundleKind::Equivalence, conditions, skipped)
}

fn cr_hclass_gl(s: &OrderedSemigroup) -> Result<BundleResult> {
    if !completely_regular(s).holds {
        return Err(Error::NotApplicable("CR-HCLASS-GL".into()));
    }
    let h = green_relation(s, Green::H);
    let closed = Verdict::from_counterexample(
        h.classes()
            .iter()
            .find_map(|c| s.closure_violation(c))
            .map(|(a, b)| vec![a, b]),
    );
    let local_inverse = Verdict::from_counterexample(
        s.elements()
            .find(|&a| {
                let a2 = s.mul(a, a);
                !h.class_of(a).iter().any(|x| {
                    s.leq(a, s.mul(s.mul(a, x), a))
                        && s.leq(a, s.mul(a2, x))
                        && s.leq(a, s.mul(x, a2))
                })
            })
            .map(|a| vec![a]),
    );
    Ok(BundleResult::new(
        "CR-HCLASS-GL",
        BundleKind::Identities,
        vec![
            cond("every H-class is an ordered subsemigroup", 0, closed),
            cond(
                "every a has h in its H-class with a <= aha, a <= a²h, a <= ha²",
                0,
                local_inverse,
            ),
            cond("every H-class is group like", 0, h_classes_group_like(s)),
        ],
    ))
}

fn cl_decomp(s: &OrderedSemigroup) -> BundleResult {
    let n = least_csc(s);
    let h = green_relation(s, Green::H);
    let j = green_relation(s, Green::J);
    let mut conditions = vec![
        cond("S is Clifford", 0, clifford(s)),
        cond(
            "J = H and the least complete semilattice congruence has group like classes",
            0,
            equals(&j, &h).and(|| decomposition_classes(s, &n, "group_like")),
        ),
        cond(
            "H is a complete semilattice congruence with group like classes",
            0,
            is_csc(s, &h).and(|| classes_satisfy(s, &h, |t| group_like(t).holds)),
        ),
    ];
    let mut skipped = Vec::new();
    match scanned(s) {
        Some(cscs) => conditions.push(cond(
            "S is a complete semilattice of group like ordered semigroups",
            0,
            exists_decomposition(&cscs, s, |t| group_like(t).holds),
        )),
        None => skipped.push(SCAN_SKIPPED.to_string()),
    }
    BundleResult::with_skipped("CL-DECOMP", BundleKind::Equivalence, conditions, skipped)
}

fn lcl_leastcsc(s: &OrderedSemigroup) -> BundleResult {
    let l = green_relation(s, Green::L);
    let mut conditions = vec![
        cond("S is left Clifford", 0, left_clifford(s)),
        cond(
            "L is a complete semilattice congruence equal to the filter relation N",
            0,
            is_csc(s, &l).and(|| equals(&l, &least_csc(s))),
        ),
    ];
    let mut skipped = Vec::new();
    match scanned(s) {
        Some(cscs) => conditions.push(cond(
            "L is the least complete semilattice congruence (partition scan)",
            0,
            is_csc(s, &l).and(|| least_among(&l, &cscs)),
        )),
        None => skipped.push(SCAN_SKIPPED.to_string()),
    }
    BundleResult::with_skipped("LCL-LEASTCSC", BundleKind::Equivalence, conditions, skipped)
}

fn lcl_decomp(s: &OrderedSemigroup) -> Result<BundleResult> {
    if !regular(s).holds {
        return Err(Error::NotApplicable("LCL-DECOMP".into()));
    }
    let n = least_csc(s);
    let mut conditions = vec![
        cond("S is left Clifford", 0, left_clifford(s)),
        cond(
            "the least complete semilattice congruence has left group like classes",
            0,
            decomposition_classes(s, &n, "left_group_like"),
        ),
    ];
    let mut skipped = Vec::new();
    match scanned(s) {
        Some(cscs) => conditions.push(cond(
            "S is a complete semilattice of left group like ordered semigroups",
            0,
            exists_decomposition(&cscs, s, |t| left_group_like(t).holds),
        )),
        None => skipped.push(SCAN_SKIPPED.to_string()),
    }
    Ok(BundleResult::with_skipped(
        "LCL-DECOMP",
        BundleKind::Equivalence,
        conditions,
        skipped,
    ))
}

/// Evaluates one registered structure theorem.
pub fn structure_theorem_check(s: &OrderedSemigroup, id: &str) -> Result<BundleResult> {
    match id {
        "CR-LEASTCSC" => cr_leastcsc(s),
        "CR-CSDECOMP" => Ok(cr_csdecomp(s)),
        "CR-HCLASS-GL" => cr_hclass_gl(s),
        "CL-DECOMP" => Ok(cl_decomp(s)),
        "LCL-LEASTCSC" => Ok(lcl_leastcsc(s)),
        "LCL-DECOMP" => lcl_decomp(s),
        other => Err(Error::UnknownId(other.to_string())),
    }
}
