// Decide a network over #17 and read off a model.

use relalg::format::parse_network;
use relalg::solver::{extract_model, Verdict};
use relalg::{catalog, is_closed, solve, Budget, Result};

const NETWORK: &str = "\
network example over ra17
node x1 x2 x3
edge x1 x2 : a
edge x1 x3 : id a
edge x2 x3 : a b
";

pub fn run_example() -> Result<()> {
    let alg = catalog::ra17();
    let net = parse_network(NETWORK, &alg)?;
    let sol = solve(&alg, &net, Budget::default())?;
    assert_eq!(sol.verdict, Verdict::Sat);
    let g = sol
        .refinement
        .as_ref()
        .expect("sat comes with a refinement");
    assert!(is_closed(&alg, g) && g.refines(&alg, &net));

    let model = extract_model(&alg, g);
    println!("{} points", model.size());
    println!("{}", serde_json::to_string_pretty(&sol.view(&alg, &net))?);

    // Closing the triangle with a forces an a-triangle, which #17 forbids.
    let mut tight = net.clone();
    tight.constrain(0, 2, alg.parse_set(&["a"])?);
    tight.constrain(1, 2, alg.parse_set(&["a"])?);
    assert_eq!(
        solve(&alg, &tight, Budget::default())?.verdict,
        Verdict::Unsat
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
