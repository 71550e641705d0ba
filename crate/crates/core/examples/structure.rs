//! Build ordered semigroups by hand and see what validation rejects.

use ordsgp::{Error, OrderedSemigroup};

fn main() -> ordsgp::Result<()> {
    // The three-element chain under min.
    let chain = OrderedSemigroup::new(
        3,
        vec![vec![0, 0, 0], vec![0, 1, 1], vec![0, 1, 2]],
        &[(0, 1), (0, 2), (1, 2)],
    )?;
    println!(
        "chain has {} elements, order {:?}",
        chain.size(),
        chain.order_pairs()
    );

    let top = chain.singleton(2);
    println!("(2] = {}", chain.down_closure(&top));
    println!("[0) = {}", chain.up_closure(&chain.singleton(0)));
    println!(
        "{{1}}{{2}} = {}",
        chain.set_product(&chain.singleton(1), &top)
    );

    // Left zeros become right zeros under the opposite product.
    let lz = OrderedSemigroup::new(2, vec![vec![0, 0], vec![1, 1]], &[])?;
    println!("dual of left zeros: {:?}", lz.dual().rows());

    // A table that is not associative.
    match OrderedSemigroup::new(2, vec![vec![1, 0], vec![0, 0]], &[]) {
        Err(Error::NotAssociative(a, b, c)) => println!("not associative at ({a}, {b}, {c})"),
        other => panic!("expected an associativity failure, got {other:?}"),
    }

    // Swapping an order relation against the table breaks compatibility.
    let err = OrderedSemigroup::new(2, vec![vec![0, 1], vec![1, 0]], &[(0, 1)]).unwrap_err();
    println!("rejected: {err}");
    Ok(())
}
