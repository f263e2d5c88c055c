// Seeded random algebras and networks, classified and solved.

use relalg::format::{write_algebra, write_network};
use relalg::{classify, gen_algebra, gen_network, solve, Budget, ClassifyOptions, Result};

pub fn run_example() -> Result<()> {
    let alg = gen_algebra(4, 11)?;
    print!("{}", write_algebra(&alg));
    let report = classify(&alg, ClassifyOptions::default())?;
    println!("verdict: {}", report.verdict.as_str());

    let net = gen_network(&alg, 5, 0.7, 11)?;
    print!("{}", write_network(&net, &alg));
    let sol = solve(&alg, &net, Budget::default())?;
    println!("network: {:?}", sol.verdict);

    let again = gen_network(&alg, 5, 0.7, 11)?;
    assert_eq!(write_network(&net, &alg), write_network(&again, &alg));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
