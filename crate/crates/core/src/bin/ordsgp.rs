use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ordsgp::classify::{equivalence_bundle, run_check, Checked, BUNDLES};
use ordsgp::decomposition::{decompose, least_csc, structure_theorem_check, THEOREMS};
use ordsgp::enumerate::{sweep, transcript_hash, transcript_line, ResumeToken};
use ordsgp::ideals::{green_relation, Green};
use ordsgp::io::{parse_document_with, ParseOptions, Structure, StructureDocument};
use ordsgp::power::power_ordered_semigroup;
use ordsgp::report::{disagreement_text, Report};
use ordsgp::{BundleResult, Error, OrderedSemigroup};

#[derive(Parser)]
#[command(name = "ordsgp", version, about = "Finite ordered semigroups")]
struct Cli {
    /// Complete order pairs transitively before validating.
    #[arg(long, global = true)]
    close_order: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a structure file.
    Validate { file: PathBuf },
    /// Decide every predicate and run every theorem check.
    Classify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Print the classes of a Green relation.
    Green {
        file: PathBuf,
        #[arg(long, value_parser = ["L", "R", "J", "H"])]
        kind: String,
    },
    /// Decompose by a complete semilattice congruence.
    Decompose {
        file: PathBuf,
        /// least-csc (alias N), or one of the Green relations L, R, J, H.
        #[arg(long, default_value = "least-csc")]
        rho: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the power ordered semigroup of a semigroup as an osg document.
    Power { file: PathBuf },
    /// Run one bundle or structure theorem.
    Check {
        file: PathBuf,
        #[arg(long, conflicts_with = "theorem", required_unless_present = "theorem")]
        bundle: Option<String>,
        #[arg(long)]
        theorem: Option<String>,
    },
    /// Enumerate ordered semigroups of the given order, optionally sweeping checks.
    Enumerate {
        #[arg(long)]
        order: usize,
        /// `all`, or a comma separated list of bundle and theorem ids.
        #[arg(long)]
        sweep: Option<String>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        resume: Option<String>,
    },
}

/// Outcome of a command: success, a disagreement, or an input error.
enum Failure {
    Disagreement,
    Input(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

type Outcome = Result<(), Failure>;

fn load(file: &PathBuf, options: ParseOptions) -> Result<Structure, Error> {
    let text = std::fs::read_to_string(file).map_err(|e| Error::Read {
        path: file.display().to_string(),
        message: e.to_string(),
    })?;
    parse_document_with(&text, options)
}

fn print_check(r: &BundleResult) -> Outcome {
    for c in &r.conditions {
        let mark = if c.verdict.holds { "T" } else { "F" };
        let witness = c
            .verdict
            .witness
            .as_ref()
            .map(|w| format!(" {w:?}"))
            .unwrap_or_default();
        println!("  [{}] {mark} {}{witness}", c.group, c.label);
    }
    if !r.skipped.is_empty() {
        println!("  skipped: {}", r.skipped.join(", "));
    }
    if r.agree {
        println!("{}: agree", r.id);
        Ok(())
    } else {
        println!("{}: DISAGREE", r.id);
        Err(Failure::Disagreement)
    }
}

fn relation_by_name(
    s: &OrderedSemigroup,
    name: &str,
) -> Result<ordsgp::EquivalenceRelation, Error> {
    match name {
        "least-csc" | "N" => Ok(least_csc(s)),
        other => Green::parse(other)
            .map(|g| green_relation(s, g))
            .ok_or_else(|| Error::UnknownId(other.to_string())),
    }
}

fn run(cli: Cli) -> Outcome {
    let options = ParseOptions {
        close_order: cli.close_order,
    };
    match cli.command {
        Command::Validate { file } => {
            let s = load(&file, options)?;
            let (kind, n) = match &s {
                Structure::Ordered(s) => ("ordered semigroup", s.size()),
                Structure::Unordered(f) => ("semigroup", f.size()),
            };
            println!("valid {kind} with {n} elements");
            Ok(())
        }
        Command::Classify { file, json } => {
            let s = load(&file, options)?.into_ordered();
            let report = Report::build(&s)?;
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.render_text());
            }
            let mut failed = false;
            for b in &report.bundles {
                if let Some(r) = b.result.as_ref().filter(|r| !r.agree) {
                    eprint!("{}", disagreement_text(r));
                    failed = true;
                }
            }
            if failed {
                Err(Failure::Disagreement)
            } else {
                Ok(())
            }
        }
        Command::Green { file, kind } => {
            let s = load(&file, options)?.into_ordered();
            let g = Green::parse(&kind).ok_or(Error::UnknownId(kind))?;
            for class in green_relation(&s, g).classes() {
                println!("{class}");
            }
            Ok(())
        }
        Command::Decompose { file, rho, json } => {
            let s = load(&file, options)?.into_ordered();
            let relation = relation_by_name(&s, &rho)?;
            let d = decompose(&s, &relation)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&d).expect("serializes"));
            } else {
                for (i, class) in d.classes.iter().enumerate() {
                    println!("S_{i} = {class:?}");
                }
                println!(
                    "semilattice order (a, b) with ab = a: {:?}",
                    d.quotient_order
                );
                for (label, v) in ["disjoint", "cover", "product", "downward"]
                    .iter()
                    .zip(&d.condition_verdicts)
                {
                    println!("{label}: {}", if v.holds { "holds" } else { "fails" });
                }
            }
            if d.conditions_hold() && d.order_is_partial_order {
                Ok(())
            } else {
                Err(Failure::Disagreement)
            }
        }
        Command::Power { file } => {
            let f = load(&file, options)?;
            let p = power_ordered_semigroup(f.semigroup())?;
            let comments = p
                .subsets
                .iter()
                .enumerate()
                .map(|(i, m)| format!("{i} = {m:?}"))
                .collect();
            print!(
                "{}",
                StructureDocument::from_ordered(&p.structure)
                    .with_comments(comments)
                    .render()
            );
            Ok(())
        }
        Command::Check {
            file,
            bundle,
            theorem,
        } => {
            let s = load(&file, options)?.into_ordered();
            let result = match (bundle, theorem) {
                (Some(id), _) => Checked::from_result(equivalence_bundle(&s, &id))?,
                (None, Some(id)) => Checked::from_result(structure_theorem_check(&s, &id))?,
                (None, None) => unreachable!("clap requires one of them"),
            };
            match result {
                Checked::Evaluated(r) => print_check(&r),
                Checked::NotApplicable => {
                    println!("not applicable: premise fails");
                    Ok(())
                }
            }
        }
        Command::Enumerate {
            order,
            sweep: ids,
            workers,
            resume,
        } => enumerate(order, ids, workers, resume),
    }
}

fn enumerate(order: usize, ids: Option<String>, workers: usize, resume: Option<String>) -> Outcome {
    let token = resume.map(|t| t.parse::<ResumeToken>()).transpose()?;
    let ids: Vec<String> = match ids.as_deref() {
        None => Vec::new(),
        Some("all") => BUNDLES
            .iter()
            .chain(THEOREMS.iter())
            .map(|s| s.to_string())
            .collect(),
        Some(list) => list.split(',').map(|s| s.trim().to_string()).collect(),
    };
    for id in &ids {
        if !BUNDLES.contains(&id.as_str()) && !THEOREMS.contains(&id.as_str()) {
            return Err(Error::UnknownBundle(id.clone()).into());
        }
    }
    struct Visit {
        structure: OrderedSemigroup,
        line: String,
        results: Vec<Checked<BundleResult>>,
    }
    let visits = sweep(order, workers.max(1), token.as_ref(), |s| Visit {
        structure: s.clone(),
        line: transcript_line(s),
        results: ids
            .iter()
            .map(|id| run_check(s, id).expect("registered id"))
            .collect(),
    })?;
    println!("structures: {}", visits.len());
    println!(
        "transcript: {}",
        transcript_hash(visits.iter().map(|v| v.line.as_str()))
    );
    let mut failed = false;
    for (k, id) in ids.iter().enumerate() {
        let mut evaluated = 0;
        let mut disagreements = 0;
        let mut first = None;
        for v in &visits {
            if let Checked::Evaluated(r) = &v.results[k] {
                evaluated += 1;
                if !r.agree {
                    disagreements += 1;
                    first.get_or_insert((v.line.clone(), r.clone()));
                }
            }
        }
        println!(
            "{id}: {evaluated} evaluated, {} not applicable, {disagreements} disagreements",
            visits.len() - evaluated
        );
        if let Some((line, r)) = first {
            failed = true;
            println!("  first counterexample: {line}");
            print!("{}", disagreement_text(&r));
        }
    }
    if let Some(last) = visits.last() {
        println!(
            "resume token: {}",
            ResumeToken::for_structure(&last.structure)?
        );
    }
    if failed {
        Err(Failure::Disagreement)
    } else {
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Disagreement) => ExitCode::from(1),
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
