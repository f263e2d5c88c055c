// Symmetry, integrality and flexible atoms of a few algebras.

use relalg::format::parse_algebra;
use relalg::{analyze, catalog, Result};

const POINT: &str = "\
algebra point
atoms id lt gt
identity id
converse lt gt
comp lt lt = lt
comp lt gt = id lt gt
comp gt lt = id lt gt
comp gt gt = gt
";

pub fn run_example() -> Result<()> {
    let point = parse_algebra(POINT)?;
    for alg in [catalog::ra17(), catalog::ra18(), point] {
        let view = analyze(&alg).view(&alg);
        println!("{}", serde_json::to_string(&view)?);
    }
    // a is not flexible in #17: a is missing from a;a.
    let r17 = analyze(&catalog::ra17());
    assert_eq!(catalog::ra17().set_names(r17.flexible_atoms), ["b"]);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
