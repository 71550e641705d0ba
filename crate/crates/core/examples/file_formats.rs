//! Read and write `.osg` and `.sgp` documents.

use ordsgp::io::{
    parse_document, parse_document_with, serialize_document, ParseOptions, Structure,
};

fn main() -> ordsgp::Result<()> {
    let pz2 = parse_document(include_str!("data/pz2.osg"))?.into_ordered();
    let text = serialize_document(&pz2);
    print!("{text}");
    assert_eq!(parse_document(&text)?.into_ordered(), pz2);

    match parse_document(include_str!("data/z2.sgp"))? {
        Structure::Unordered(f) => println!("z2.sgp is a plain semigroup of order {}", f.size()),
        Structure::Ordered(_) => unreachable!(),
    }

    // Only the covering pairs of a chain; the closure option adds the rest.
    let covers = "kind: osg\nelements: 3\ntable:\n0 0 0\n0 1 1\n0 1 2\norder:\n0 1\n1 2\n";
    println!("strict parse: {}", parse_document(covers).unwrap_err());
    let closed = parse_document_with(covers, ParseOptions { close_order: true })?.into_ordered();
    println!("closed order {:?}", closed.order_pairs());

    let broken = "kind: osg\nelements: 2\ntable:\n0 0\n0\n";
    println!("syntax error: {}", parse_document(broken).unwrap_err());
    Ok(())
}

#[cfg(test)]
mod tests {
    #[test]
    fn runs() {
        super::main().unwrap();
    }
}
