//! Enumerate small ordered semigroups in parallel and sweep checks over them.

use ordsgp::classify::{run_check, Checked};
use ordsgp::enumerate::{
    count_isomorphism_classes, enumerate_ordered_semigroups, sweep, transcript_hash,
    transcript_line, ResumeToken,
};

fn main() -> ordsgp::Result<()> {
    let all: Vec<_> = enumerate_ordered_semigroups(3)?.collect();
    println!("{} ordered semigroups of order 3", all.len());
    println!("{} up to isomorphism", count_isomorphism_classes(&all));

    let lines = sweep(3, 4, None, transcript_line)?;
    println!(
        "transcript {}",
        transcript_hash(lines.iter().map(String::as_str))
    );

    let mut disagreements = 0;
    let results = sweep(3, 4, None, |s| {
        run_check(s, "LCL-LEASTCSC").expect("registered")
    })?;
    for (s, r) in all.iter().zip(&results) {
        if let Checked::Evaluated(r) = r {
            if !r.agree {
                disagreements += 1;
                if disagreements == 1 {
                    println!("first disagreement: {}", transcript_line(s));
                }
            }
        }
    }
    println!("LCL-LEASTCSC disagrees on {disagreements} structures");

    // Stop halfway and pick up again from a token.
    let token = ResumeToken::for_structure(&all[all.len() / 2])?;
    let rest = sweep(3, 1, Some(&token), |_| ())?;
    println!("resuming from {token} visits {} structures", rest.len());
    Ok(())
}

#[cfg(test)]
mod tests {
    #[test]
    fn runs() {
        super::main().unwrap();
    }
}
