// Parse an algebra from text and check the relation algebra axioms.

use relalg::format::parse_algebra;
use relalg::{catalog, Result};

const BROKEN: &str = "\
algebra broken
atoms id a b
identity id
comp a a = id
comp a b = a
comp b a = a
comp b b = id
";

pub fn run_example() -> Result<()> {
    for entry in catalog::entries() {
        let report = entry.algebra.validate();
        println!("{}: ok = {}", report.algebra, report.ok);
        assert!(report.ok);
    }

    let broken = parse_algebra(BROKEN)?;
    let report = broken.validate();
    assert!(!report.ok);
    for v in &report.violations {
        println!("{:?} at {:?}: {}", v.axiom, v.atoms, v.message);
    }
    assert!(broken.ensure_valid().is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
