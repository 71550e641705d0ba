//! Decide every predicate and run the theorem checks on one structure.

use ordsgp::classify::{classify, Checked};
use ordsgp::io::parse_document;
use ordsgp::report::Report;

fn main() -> ordsgp::Result<()> {
    let s = parse_document(include_str!("data/lz2.osg"))?.into_ordered();
    let report = classify(&s)?;

    println!("regular: {}", report.regular);
    for (name, verdict) in &report.predicates {
        match verdict {
            Checked::Evaluated(v) => println!("  {name:<22} {} {:?}", v.holds, v.witness),
            Checked::NotApplicable => println!("  {name:<22} n/a"),
        }
    }
    for (id, checked) in &report.bundles {
        let state = match checked {
            Checked::Evaluated(r) if r.agree => "agree",
            Checked::Evaluated(_) => "DISAGREE",
            Checked::NotApplicable => "premise fails",
        };
        println!("  {id:<14} {state}");
    }
    assert!(report.implications_hold());
    assert!(report.all_bundles_agree());

    // The same data as the CLI's JSON report.
    let json = Report::build(&s)?.to_json();
    println!("json report: {} bytes", json.len());
    Ok(())
}

#[cfg(test)]
mod tests {
    #[test]
    fn runs() {
        super::main().unwrap();
    }
}
