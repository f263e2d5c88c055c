// Adjoin a fresh flexible atom to #17 and inspect the new forbidden triples.

use std::collections::BTreeSet;

use relalg::format::write_algebra;
use relalg::{add_flexible_atom, analyze, catalog, Result};

pub fn run_example() -> Result<()> {
    let alg = catalog::ra17();
    let ext = add_flexible_atom(&alg)?;
    ext.ensure_valid()?;
    print!("{}", write_algebra(&ext));

    let s = ext.atom("s").unwrap();
    assert!(analyze(&ext).flexible_atoms.contains(s));

    let name = |t: [relalg::AtomId; 3]| t.map(|a| ext.atom_name(a).to_string());
    let before: BTreeSet<_> = alg
        .forbidden_triples()
        .into_iter()
        .map(|t| t.map(|a| alg.atom_name(a).to_string()))
        .collect();
    let after: BTreeSet<_> = ext.forbidden_triples().into_iter().map(name).collect();
    for t in after.difference(&before) {
        println!("new forbidden triple {t:?}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
