//! Split a structure into classes of a complete semilattice congruence.

use ordsgp::decomposition::{
    complete_semilattice_congruences, decompose, least_csc, relation_properties,
};
use ordsgp::ideals::{green_relation, Green};
use ordsgp::OrderedSemigroup;

fn main() -> ordsgp::Result<()> {
    // Two left zeros {0,1} above a zero 2 in the table, ordered 2 < 0, 2 < 1.
    let s = OrderedSemigroup::new(
        3,
        vec![vec![0, 0, 2], vec![1, 1, 2], vec![2, 2, 2]],
        &[(2, 0), (2, 1)],
    )?;

    let n = least_csc(&s);
    let d = decompose(&s, &n)?;
    println!("least csc has {} classes", d.quotient_size);
    for (i, class) in d.classes.iter().enumerate() {
        let left_group_like = d.class_types[i].is("left_group_like");
        println!("  S_{i} = {class:?}, left group like: {left_group_like}");
    }
    println!("semilattice order {:?}", d.quotient_order);
    println!("conditions hold: {}", d.conditions_hold());

    let l = green_relation(&s, Green::L);
    let p = relation_properties(&s, &l)?;
    println!(
        "L is a complete semilattice congruence: {}",
        p.complete_semilattice.holds
    );

    let all = complete_semilattice_congruences(&s)?;
    println!("{} complete semilattice congruences in total", all.len());
    assert!(all.iter().all(|rho| n.is_finer_than(rho)));
    Ok(())
}

#[cfg(test)]
mod tests {
    #[test]
    fn runs() {
        super::main().unwrap();
    }
}
