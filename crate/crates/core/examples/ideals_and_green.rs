//! Principal ideals, the ideal lattice, Green's relations and filters.

use ordsgp::ideals::{
    enumerate_ideals, green_relation, n_relation, principal_filter, principal_ideal, Green, Side,
};
use ordsgp::io::parse_document;

fn main() -> ordsgp::Result<()> {
    let s = parse_document(include_str!("data/lcl_converse.osg"))?.into_ordered();

    for a in s.elements() {
        println!(
            "a={a}: L(a)={} R(a)={} I(a)={} N(a)={}",
            principal_ideal(&s, a, Side::Left),
            principal_ideal(&s, a, Side::Right),
            principal_ideal(&s, a, Side::TwoSided),
            principal_filter(&s, a),
        );
    }

    let lefts = enumerate_ideals(&s, Side::Left)?;
    println!("{} left ideals:", lefts.len());
    for l in &lefts {
        println!("  {l}");
    }

    for g in [Green::L, Green::R, Green::J, Green::H] {
        let classes: Vec<String> = green_relation(&s, g)
            .classes()
            .iter()
            .map(|c| c.to_string())
            .collect();
        println!("{g}-classes: {}", classes.join(" "));
    }
    println!("N-classes: {}", n_relation(&s).num_classes());
    Ok(())
}

#[cfg(test)]
mod tests {
    #[test]
    fn runs() {
        super::main().unwrap();
    }
}
