// Solve a network through its atom-structure CSP and compare.

use relalg::format::parse_network;
use relalg::solver::Verdict;
use relalg::{
    build_atom_structure, catalog, reduce_to_atom_csp, solve, solve_atom_csp, Budget, Result,
};

pub fn run_example() -> Result<()> {
    let alg = catalog::ra17();
    let os = build_atom_structure(&alg);
    println!("|H| = {}", os.h_size());
    let net = parse_network(
        "network n over ra17\nnode p q r s\nedge p q : a\nedge q r : a\nedge r s : a\nedge p s : a\nedge p r : a b\n",
        &alg,
    )?;
    let inst = reduce_to_atom_csp(&alg, &net);
    println!(
        "{} variables, {} ternary constraints",
        inst.variables.len(),
        inst.ternary.len()
    );
    let (via_csp, stats) = solve_atom_csp(&os, &inst, Budget::default())?;
    let direct = solve(&alg, &net, Budget::default())?;
    println!("csp: {} nodes; direct: {:?}", stats.nodes, direct.verdict);
    assert_eq!(via_csp.is_found(), direct.verdict == Verdict::Sat);
    if let Some(assignment) = via_csp.found() {
        assert!(inst.satisfied_by(&os, &assignment));
        let g = inst.refinement(&alg, &assignment);
        assert!(relalg::is_closed(&alg, &g));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
