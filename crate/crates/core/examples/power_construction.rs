//! The power ordered semigroup of finite nonempty subsets and its universal property.

use ordsgp::io::{parse_document, serialize_document};
use ordsgp::power::{
    all_morphisms, power_correspondence_check, power_ordered_semigroup, universal_extension,
    PowerProperty,
};

fn main() -> ordsgp::Result<()> {
    let z2 = parse_document(include_str!("data/z2.sgp"))?;
    let f = z2.semigroup();
    let p = power_ordered_semigroup(f)?;
    for (i, subset) in p.subsets.iter().enumerate() {
        println!("{i} = {subset:?}");
    }
    print!("{}", serialize_document(&p.structure));

    for property in PowerProperty::ALL {
        let r = power_correspondence_check(f, property)?;
        println!("{}: {}", r.id, if r.agree { "agree" } else { "DISAGREE" });
    }

    // Every homomorphism into an ordered semigroup with joins extends along x -> {x}.
    let target = parse_document(include_str!("data/pz2.osg"))?.into_ordered();
    for m in all_morphisms(f, &target) {
        let phi = universal_extension(f, &target, &m)?;
        println!("f = {:?} extends to {:?}", m.map, phi.map);
    }
    Ok(())
}
