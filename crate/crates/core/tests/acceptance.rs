//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs as a plain binary (`harness = false`) so the lines show up in the
//! output of `cargo test`. The process exits non-zero on any failure that is
//! not the single documented finding described under criterion 2.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ordsgp::classify::{run_check, Checked, BUNDLES};
use ordsgp::decomposition::{
    complete_semilattice_congruences, decompose, least_csc, relation_properties, THEOREMS,
};
use ordsgp::elements::{
    element_regularity, group_component, group_component_independent, h_commute_witness,
    is_regular, ordered_idempotents,
};
use ordsgp::enumerate::{
    enumerate_ordered_semigroups, enumerate_semigroups, enumeration_hash, naive_semigroups, sweep,
};
use ordsgp::fixtures;
use ordsgp::ideals::{enumerate_ideals, lemma_bi13_check, n_relation, principal_ideal, Side};
use ordsgp::io::{parse_document, serialize_document};
use ordsgp::power::{
    all_morphisms, power_correspondence_check, power_ordered_semigroup, universal_extension,
    PowerProperty,
};
use ordsgp::structure::close_order;
use ordsgp::{ElementSet, Error, OrderedSemigroup};

/// Largest carrier of the theorem sweeps. Every structure up to this size is
/// visited, which covers the required sample of at least 10,000 at size 4.
const SWEEP_MAX: usize = 4;

/// Ordered semigroups on 1..=4 labeled elements, frozen from the first
/// oracle-verified run.
const ORDERED_COUNTS: [usize; 4] = [1, 20, 971, 107_688];
const SEMIGROUP_COUNTS: [usize; 4] = [1, 8, 113, 3492];

/// LCL-LEASTCSC disagreements per carrier size (see criterion 2).
const LCL_LEASTCSC_FINDING: [usize; 4] = [0, 0, 12, 2136];

fn workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

struct Line {
    id: &'static str,
    pass: bool,
    /// Failure that matches the documented finding exactly.
    known: bool,
    detail: String,
}

fn line(id: &'static str, pass: bool, detail: String) -> Line {
    Line {
        id,
        pass,
        known: false,
        detail,
    }
}

// ---------------------------------------------------------------------------

#[derive(Default)]
struct Tally {
    evaluated: usize,
    skipped_premise: usize,
    disagreements: usize,
}

fn bundle_sweep(
    ids: &[&str],
) -> (
    BTreeMap<String, Vec<Tally>>,
    Vec<Vec<(String, OrderedSemigroup, bool)>>,
) {
    let mut tallies: BTreeMap<String, Vec<Tally>> = BTreeMap::new();
    let mut failures = Vec::new();
    for n in 1..=SWEEP_MAX {
        let per_structure = sweep(n, workers(), None, |s| {
            ids.iter()
                .map(|id| run_check(s, id).expect("registered id"))
                .collect::<Vec<_>>()
        })
        .expect("within limits");
        let structures: Vec<OrderedSemigroup> = enumerate_ordered_semigroups(n).unwrap().collect();
        let mut fails = Vec::new();
        for (k, id) in ids.iter().enumerate() {
            let mut t = Tally::default();
            for (s, results) in structures.iter().zip(&per_structure) {
                match &results[k] {
                    Checked::Evaluated(r) => {
                        t.evaluated += 1;
                        if !r.agree {
                            t.disagreements += 1;
                            fails.push((id.to_string(), s.clone(), is_regular(s)));
                        }
                    }
                    Checked::NotApplicable => t.skipped_premise += 1,
                }
            }
            tallies.entry(id.to_string()).or_default().push(t);
        }
        failures.push(fails);
    }
    (tallies, failures)
}

fn tally_text(tallies: &BTreeMap<String, Vec<Tally>>) -> String {
    tallies
        .iter()
        .map(|(id, ts)| {
            let ev: usize = ts.iter().map(|t| t.evaluated).sum();
            let na: usize = ts.iter().map(|t| t.skipped_premise).sum();
            let d: usize = ts.iter().map(|t| t.disagreements).sum();
            format!("      {id:<13} evaluated {ev:>6}  premise fails {na:>6}  disagreements {d}")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn total_structures() -> usize {
    ORDERED_COUNTS[..SWEEP_MAX].iter().sum()
}

fn criterion_1() -> Line {
    let (tallies, failures) = bundle_sweep(&BUNDLES);
    let bad: usize = failures.iter().map(Vec::len).sum();
    // G_e with one shared z against independent z's.
    let variant_differences: usize = (1..=SWEEP_MAX)
        .map(|n| {
            sweep(n, workers(), None, |s| {
                ordered_idempotents(s)
                    .iter()
                    .filter(|&e| {
                        group_component(s, e).unwrap() != group_component_independent(s, e).unwrap()
                    })
                    .count()
            })
            .unwrap()
            .into_iter()
            .sum::<usize>()
        })
        .sum();
    line(
        "1",
        bad == 0,
        format!(
            "{} bundles on all {} ordered semigroups with n <= {SWEEP_MAX} ({} at n = 4): {bad} disagreements; \
             G_e shared-z and independent-z variants differ on {variant_differences} (structure, idempotent) pairs\n{}",
            BUNDLES.len(),
            total_structures(),
            ORDERED_COUNTS[3],
            tally_text(&tallies)
        ),
    )
}

fn criterion_2() -> Line {
    let (tallies, failures) = bundle_sweep(&THEOREMS);
    let lcl_counts: Vec<usize> = failures
        .iter()
        .map(|f| f.iter().filter(|(id, _, _)| id == "LCL-LEASTCSC").count())
        .collect();
    let other_failures: Vec<&(String, OrderedSemigroup, bool)> = failures
        .iter()
        .flatten()
        .filter(|(id, _, _)| id != "LCL-LEASTCSC")
        .collect();
    let lcl_all_nonregular = failures
        .iter()
        .flatten()
        .filter(|(id, _, _)| id == "LCL-LEASTCSC")
        .all(|(_, _, regular)| !regular);
    // The shape of each LCL-LEASTCSC failure: left Clifford fails, the L sides hold.
    let lcl_shape = failures.iter().flatten().all(|(id, s, _)| {
        id != "LCL-LEASTCSC" || {
            let Checked::Evaluated(r) = run_check(s, id).unwrap() else {
                return false;
            };
            !r.conditions[0].verdict.holds && r.conditions[1..].iter().all(|c| c.verdict.holds)
        }
    });

    // The four decomposition conditions on every completely regular structure.
    let mut cr_structures = 0;
    let mut decomposition_failures = 0;
    for n in 1..=SWEEP_MAX {
        let results = sweep(n, workers(), None, |s| {
            let cr = ordsgp::classify::predicate(s, "completely_regular")
                .map(|v| v.holds)
                .unwrap_or(false);
            if !cr {
                return None;
            }
            Some(match decompose(s, &least_csc(s)) {
                Ok(d) => {
                    let t = &d.quotient_table;
                    let semilattice = (0..d.quotient_size)
                        .all(|a| t[a][a] == a && (0..d.quotient_size).all(|b| t[a][b] == t[b][a]));
                    d.conditions_hold() && d.order_is_partial_order && semilattice
                }
                Err(_) => false,
            })
        })
        .unwrap();
        cr_structures += results.iter().flatten().count();
        decomposition_failures += results.iter().flatten().filter(|ok| !**ok).count();
    }

    let finding_matches = lcl_counts == LCL_LEASTCSC_FINDING[..SWEEP_MAX]
        && lcl_all_nonregular
        && lcl_shape
        && other_failures.is_empty()
        && decomposition_failures == 0;
    let pass = lcl_counts.iter().all(|&c| c == 0)
        && other_failures.is_empty()
        && decomposition_failures == 0;
    let mut detail = format!(
        "{} theorems on {} structures; decompose(S, least csc) passes all four conditions on {}/{} completely regular structures\n{}",
        THEOREMS.len(),
        total_structures(),
        cr_structures - decomposition_failures,
        cr_structures,
        tally_text(&tallies)
    );
    if !pass {
        detail.push_str(&format!(
            "\n      LCL-LEASTCSC disagrees on {:?} structures (n = 1..={SWEEP_MAX}); every one is not regular, \
             L is a complete semilattice congruence equal to the least one, and S is not left Clifford \
             because left Clifford presupposes regularity. The stated converse needs a regularity premise.",
            lcl_counts
        ));
        if let Some((_, s, _)) = failures
            .iter()
            .flatten()
            .find(|(id, _, _)| id == "LCL-LEASTCSC")
        {
            detail.push_str(&format!(
                "\n      smallest counterexample: table {:?}, order {:?}",
                s.rows(),
                s.order_pairs()
            ));
        }
        // The same theorem restricted to regular structures.
        let regular_disagreements = failures
            .iter()
            .flatten()
            .filter(|(id, _, regular)| id == "LCL-LEASTCSC" && *regular)
            .count();
        detail.push_str(&format!(
            "\n      restricted to regular structures LCL-LEASTCSC has {regular_disagreements} disagreements"
        ));
    }
    Line {
        id: "2",
        pass,
        known: !pass && finding_matches,
        detail,
    }
}

fn criterion_3() -> Line {
    let mut checked = 0;
    let mut violations = 0;
    let mut first = None;
    for n in 1..=SWEEP_MAX {
        let results = sweep(n, workers(), None, |s| {
            let least = least_csc(s);
            let props = relation_properties(s, &least).unwrap();
            let flags = props.left_congruence.holds
                && props.right_congruence.holds
                && props.congruence.holds
                && props.semilattice.holds
                && props.complete_semilattice.holds;
            let cscs = complete_semilattice_congruences(s).unwrap();
            let contained = cscs.iter().all(|rho| least.is_finer_than(rho));
            let meet = cscs.iter().fold(
                ordsgp::EquivalenceRelation::universal(s.size()),
                |acc, r| acc.meet(r),
            );
            let ok = least == n_relation(s)
                && flags
                && contained
                && meet == least
                && cscs.contains(&least);
            (ok, s.clone())
        })
        .unwrap();
        checked += results.len();
        for (ok, s) in results {
            if !ok {
                violations += 1;
                first.get_or_insert(s);
            }
        }
    }
    let mut detail = format!(
        "{checked} structures: least csc equals N, passes every congruence flag, is the meet of all \
         complete semilattice congruences found by partition scan; {violations} violations"
    );
    if let Some(s) = first {
        detail.push_str(&format!(
            "\n      first violation: {:?} {:?}",
            s.rows(),
            s.order_pairs()
        ));
    }
    line("3", violations == 0, detail)
}

fn join_closed_fixtures() -> Vec<(&'static str, OrderedSemigroup)> {
    let all_joins = |s: &OrderedSemigroup| {
        s.elements()
            .all(|a| s.elements().all(|b| ordsgp::power::join(s, a, b).is_some()))
    };
    let mut out: Vec<(&'static str, OrderedSemigroup)> = fixtures::all()
        .into_iter()
        .filter(|(_, s)| all_joins(s))
        .collect();
    out.push((
        "P_f(left zero)",
        power_ordered_semigroup(&fixtures::left_zero2())
            .unwrap()
            .structure,
    ));
    out.push((
        "P_f(null)",
        power_ordered_semigroup(&fixtures::null_semigroup2())
            .unwrap()
            .structure,
    ));
    assert!(out.iter().all(|(_, s)| all_joins(s)));
    out
}

fn criterion_4() -> Line {
    let mut tables = 0;
    let mut disagreements = Vec::new();
    let mut positives = [0usize; 3];
    for n in 1..=3 {
        for f in enumerate_semigroups(n).unwrap() {
            tables += 1;
            for (k, p) in PowerProperty::ALL.into_iter().enumerate() {
                let r = power_correspondence_check(&f, p).unwrap();
                if !r.agree {
                    disagreements.push((p.name(), f.rows()));
                }
                if r.value() == Some(true) {
                    positives[k] += 1;
                }
            }
        }
    }
    let targets = join_closed_fixtures();
    let mut morphisms = 0;
    let mut extension_failures = Vec::new();
    for n in 1..=2 {
        for f in enumerate_semigroups(n).unwrap() {
            for (name, s) in &targets {
                for m in all_morphisms(&f, s) {
                    morphisms += 1;
                    match universal_extension(&f, s, &m) {
                        Ok(phi) if (0..n).all(|x| phi.map[x] == m.map[x]) => {}
                        other => extension_failures.push((
                            name.to_string(),
                            f.rows(),
                            m.map.clone(),
                            other.err(),
                        )),
                    }
                }
            }
        }
    }
    let names: Vec<&str> = targets.iter().map(|(n, _)| *n).collect();
    let mut detail = format!(
        "{tables} tables: correspondences agree except {} (groups {}, left groups {}, completely regular {}); \
         {morphisms} homomorphisms into {names:?}: {} extension failures",
        disagreements.len(),
        positives[0],
        positives[1],
        positives[2],
        extension_failures.len()
    );
    for d in disagreements.iter().take(3) {
        detail.push_str(&format!("\n      {d:?}"));
    }
    for e in extension_failures.iter().take(3) {
        detail.push_str(&format!("\n      {e:?}"));
    }
    line(
        "4",
        disagreements.is_empty() && extension_failures.is_empty(),
        detail,
    )
}

fn subsets(n: usize) -> Vec<ElementSet> {
    (0u64..1 << n)
        .map(|m| ElementSet::from_members(n, (0..n).filter(|i| m >> i & 1 == 1)))
        .collect()
}

fn kernel_checks(s: &OrderedSemigroup) -> (usize, usize, usize) {
    let n = s.size();
    let mut closure = 0;
    for x in subsets(n) {
        let down = s.down_closure(&x);
        let up = s.up_closure(&x);
        let extensive = x.is_subset(&down) && x.is_subset(&up);
        let idempotent = s.down_closure(&down) == down && s.up_closure(&up) == up;
        let monotone = s.elements().all(|a| {
            let mut y = x.clone();
            y.insert(a);
            down.is_subset(&s.down_closure(&y)) && up.is_subset(&s.up_closure(&y))
        });
        if !(extensive && idempotent && monotone) {
            closure += 1;
        }
    }
    let mut bi13 = 0;
    if is_regular(s) {
        let idem = ordered_idempotents(s);
        for e in idem.iter() {
            for f in idem.iter() {
                if !lemma_bi13_check(s, e, f).unwrap().agree {
                    bi13 += 1;
                }
            }
        }
    }
    let mut minimality = 0;
    for side in Side::ALL {
        let ideals = enumerate_ideals(s, side).unwrap();
        for a in s.elements() {
            let meet = ideals
                .iter()
                .filter(|i| i.contains(a))
                .fold(s.carrier(), |acc, i| acc.intersection(i));
            if meet != principal_ideal(s, a, side) {
                minimality += 1;
            }
        }
    }
    (closure, bi13, minimality)
}

fn criterion_5() -> Line {
    let mut totals = (0, 0, 0);
    let mut regular = 0;
    for n in 1..=SWEEP_MAX {
        for (c, b, m, r) in sweep(n, workers(), None, |s| {
            let (c, b, m) = kernel_checks(s);
            (c, b, m, is_regular(s))
        })
        .unwrap()
        {
            totals.0 += c;
            totals.1 += b;
            totals.2 += m;
            regular += r as usize;
        }
    }
    line(
        "5",
        totals == (0, 0, 0),
        format!(
            "{} structures ({regular} regular): closure-law violations {}, BI13 violations {}, \
             principal-ideal minimality violations {}",
            total_structures(),
            totals.0,
            totals.1,
            totals.2
        ),
    )
}

/// Least `x` with `a <= f(x)`, by plain scan.
fn brute_least(s: &OrderedSemigroup, a: usize, f: impl Fn(usize) -> usize) -> Option<usize> {
    (0..s.size()).find(|&x| s.leq(a, f(x)))
}

fn criterion_6() -> Line {
    let mut round_trip_failures = 0;
    let mut round_trips = 0;
    let mut items: Vec<OrderedSemigroup> = fixtures::all().into_iter().map(|(_, s)| s).collect();
    for n in 1..=3 {
        items.extend(enumerate_ordered_semigroups(n).unwrap());
    }
    for s in &items {
        round_trips += 1;
        let text = serialize_document(s);
        let back = parse_document(&text).map(|p| p.into_ordered());
        if back.as_ref() != Ok(s) || serialize_document(back.as_ref().unwrap()) != text {
            round_trip_failures += 1;
        }
    }

    let h1 = enumeration_hash(3, 1).unwrap();
    let h2 = enumeration_hash(3, 4).unwrap();
    let h3 = enumeration_hash(3, 1).unwrap();
    let h4a = enumeration_hash(4, 1).unwrap();
    let h4b = enumeration_hash(4, 3).unwrap();
    let hashes_equal = h1 == h2 && h1 == h3 && h4a == h4b;

    // Witness minimality against brute force on seeded random cases.
    let pool: Vec<OrderedSemigroup> = enumerate_ordered_semigroups(4).unwrap().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut witness_failures = 0;
    let cases = 100;
    for _ in 0..cases {
        let s = &pool[rng.random_range(0..pool.len())];
        let a = rng.random_range(0..s.size());
        let b = rng.random_range(0..s.size());
        let a2 = s.mul(a, a);
        let r = element_regularity(s, a);
        let expected = [
            brute_least(s, a, |x| s.mul(s.mul(a, x), a)),
            brute_least(s, a, |x| s.mul(s.mul(a2, x), a2)),
            brute_least(s, a, |x| s.mul(x, a2)),
            brute_least(s, a, |x| s.mul(a2, x)),
        ];
        let got = [
            r.regular,
            r.completely_regular,
            r.left_regular,
            r.right_regular,
        ];
        let hc = brute_least(s, s.mul(a, b), |x| s.mul(s.mul(b, x), a));
        // Least violating tuple when an order is perturbed: drop one order pair and close it.
        let pairs = s.order_pairs();
        let compat_ok = if pairs.is_empty() {
            true
        } else {
            let extra = (b, a);
            let mut bumped = pairs.clone();
            bumped.push(extra);
            match close_order(s.size(), &bumped)
                .and_then(|p| OrderedSemigroup::new(s.size(), s.rows(), &p))
            {
                Err(Error::NotCompatible { a: x, b: y, c, .. }) => {
                    let closed = close_order(s.size(), &bumped).unwrap();
                    let le = |i: usize, j: usize| i == j || closed.contains(&(i, j));
                    let least = (0..s.size())
                        .flat_map(|i| (0..s.size()).map(move |j| (i, j)))
                        .filter(|&(i, j)| i != j && le(i, j))
                        .flat_map(|(i, j)| (0..s.size()).map(move |k| (i, j, k)))
                        .find(|&(i, j, k)| {
                            !le(s.mul(k, i), s.mul(k, j)) || !le(s.mul(i, k), s.mul(j, k))
                        });
                    least == Some((x, y, c))
                }
                _ => true,
            }
        };
        if got != expected || h_commute_witness(s, a, b) != hc || !compat_ok {
            witness_failures += 1;
        }
    }
    line(
        "6",
        round_trip_failures == 0 && hashes_equal && witness_failures == 0,
        format!(
            "round trip {}/{round_trips}; transcript n=3 {} (1, 4, 1 workers{}), n=4 {} (1, 3 workers); \
             witness spot checks {}/{cases}",
            round_trips - round_trip_failures,
            &h1[..16],
            if hashes_equal { ", equal" } else { ", DIFFER" },
            &h4a[..16],
            cases - witness_failures
        ),
    )
}

fn naive_ordered_count(n: usize) -> usize {
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|(i, j)| i != j)
        .collect();
    naive_semigroups(n)
        .iter()
        .map(|f| {
            (0u64..1 << off.len())
                .filter(|m| {
                    let pairs: Vec<(usize, usize)> = off
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| m >> k & 1 == 1)
                        .map(|(_, p)| *p)
                        .collect();
                    OrderedSemigroup::new(n, f.rows(), &pairs).is_ok()
                })
                .count()
        })
        .sum()
}

fn criterion_7() -> Line {
    let semigroups: Vec<usize> = (1..=4)
        .map(|n| enumerate_semigroups(n).unwrap().count())
        .collect();
    let ordered: Vec<usize> = (1..=4)
        .map(|n| enumerate_ordered_semigroups(n).unwrap().count())
        .collect();
    let naive_sg: Vec<usize> = (1..=3).map(|n| naive_semigroups(n).len()).collect();
    let naive_osg: Vec<usize> = (1..=3).map(naive_ordered_count).collect();
    let pass = semigroups == SEMIGROUP_COUNTS
        && ordered == ORDERED_COUNTS
        && naive_sg == SEMIGROUP_COUNTS[..3]
        && naive_osg == ORDERED_COUNTS[..3];
    line(
        "7",
        pass,
        format!(
            "semigroups {semigroups:?} (naive {naive_sg:?}), ordered semigroups {ordered:?} (naive {naive_osg:?}); \
             frozen {SEMIGROUP_COUNTS:?} / {ORDERED_COUNTS:?}"
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Line); 7] = [
        ("exhaustive theorem sweep", criterion_1),
        ("structure-theorem sweep", criterion_2),
        ("least-congruence oracle", criterion_3),
        ("power correspondences", criterion_4),
        ("kernel properties", criterion_5),
        ("determinism and round trip", criterion_6),
        ("regression constants", criterion_7),
    ];
    println!("\nacceptance criteria");
    let mut unexpected = 0;
    for (title, run) in criteria {
        let start = Instant::now();
        let l = run();
        let status = if l.pass { "PASS" } else { "FAIL" };
        println!(
            "AC{} {status} {title} ({:.1}s): {}",
            l.id,
            start.elapsed().as_secs_f64(),
            l.detail
        );
        if !l.pass && !l.known {
            unexpected += 1;
        }
    }
    if unexpected == 0 {
        println!("acceptance: no failures beyond the documented finding\n");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {unexpected} unexpected failures\n");
        ExitCode::FAILURE
    }
}
