//! Ordered idempotents, regularity witnesses, inverses and H-commutation.

use ordsgp::elements::{
    element_regularity, group_component, h_commute_witness, inverses_of, is_ordered_idempotent,
    ordered_idempotents,
};
use ordsgp::io::parse_document;

fn main() -> ordsgp::Result<()> {
    for (name, text) in [
        ("pz2", include_str!("data/pz2.osg")),
        ("lcl_converse", include_str!("data/lcl_converse.osg")),
    ] {
        let s = parse_document(text)?.into_ordered();
        println!("{name}: ordered idempotents {}", ordered_idempotents(&s));
        for a in s.elements() {
            let r = element_regularity(&s, a);
            println!(
                "  {a}: regular {:?}, completely regular {:?}, left {:?}, right {:?}, inverses {}",
                r.regular,
                r.completely_regular,
                r.left_regular,
                r.right_regular,
                inverses_of(&s, a),
            );
        }
        let failing = s
            .elements()
            .flat_map(|a| s.elements().map(move |b| (a, b)))
            .find(|&(a, b)| h_commute_witness(&s, a, b).is_none());
        match failing {
            None => println!("  H-commutative: every ab lies below some bxa"),
            Some((a, b)) => println!("  not H-commutative: no x with {a}·{b} <= {b}·x·{a}"),
        }
        for e in s.elements().filter(|&e| is_ordered_idempotent(&s, e)) {
            match group_component(&s, e) {
                Ok(g) => println!("  G_{e} = {g}"),
                Err(err) => println!("  G_{e}: {err}"),
            }
        }
    }
    Ok(())
}
