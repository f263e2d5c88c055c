// Path consistency on its own: pruning a #17 triangle.

use relalg::format::parse_network;
use relalg::network::DomainMatrix;
use relalg::solver::{path_consistency_with, QueueOrder};
use relalg::{catalog, normalize, Normalized, Result};

pub fn run_example() -> Result<()> {
    let alg = catalog::ra17();
    let net = parse_network(
        "network t over ra17\nnode x y z\nedge x y : a\nedge y z : a\nedge x z : a b\n",
        &alg,
    )?;
    let Normalized::Network(norm) = normalize(&alg, &net)? else {
        unreachable!("no empty labels here")
    };
    let dm = DomainMatrix::from_network(&alg, &norm);
    for order in [QueueOrder::Fifo, QueueOrder::Lifo, QueueOrder::Shuffled(5)] {
        let closed = path_consistency_with(&alg, &dm, order).expect("consistent");
        // a;a = {id, b} and the label excludes id, so x-z becomes b.
        println!("{order:?}: x-z = {}", alg.format_set(closed.get(0, 2)));
        assert_eq!(closed.get(0, 2), alg.parse_set(&["b"])?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
