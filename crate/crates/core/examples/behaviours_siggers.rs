// The 6-ary dominant operation on #18: a Siggers operation that preserves
// the atom structure, and a binary table that does not preserve #17.

use relalg::format::parse_behaviour;
use relalg::structure::Counterexample;
use relalg::{build_atom_structure, catalog, is_siggers, preserves, AtomId, Behaviour, Result};

pub fn run_example() -> Result<()> {
    let (id, a, b) = (AtomId(0), AtomId(1), AtomId(2));
    let s = Behaviour::from_fn(6, 3, |t| {
        if t.contains(&a) {
            a
        } else if t.contains(&b) {
            b
        } else {
            id
        }
    })?;
    let os18 = build_atom_structure(&catalog::ra18());
    assert!(is_siggers(&s)?);
    assert!(preserves(&os18, &s)?.is_none());
    println!("dominant 6-ary operation: Siggers and preserves #18");

    let os17 = build_atom_structure(&catalog::ra17());
    let names = os17.atom_names();
    let f = parse_behaviour(
        "id id -> id\nid a -> a\nid b -> b\na id -> a\na a -> a\na b -> b\nb id -> b\nb a -> b\nb b -> b\n",
        names,
    )?;
    match preserves(&os17, &f)? {
        Some(Counterexample::Triples { rows, image }) => {
            let show = |t: [AtomId; 3]| t.map(|x| names[x.index()].as_str());
            let rows: Vec<_> = rows.into_iter().map(show).collect();
            println!("rows {rows:?} map to forbidden {:?}", show(image));
        }
        other => panic!("expected a triple counterexample, got {other:?}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
