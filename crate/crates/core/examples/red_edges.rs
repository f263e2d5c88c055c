// Red edges of #18 and the maximal-symmetric binary behaviour.

use relalg::format::write_behaviour;
use relalg::{
    build_atom_structure, catalog, maximal_symmetric, preserves, red_edges, Budget, Result,
};

pub fn run_example() -> Result<()> {
    let os = build_atom_structure(&catalog::ra18());
    let red = red_edges(&os, Budget::default())?;
    for w in &red.edges {
        println!(
            "red edge {{{},{}}} via {}",
            os.atom_name(w.pair[0]),
            os.atom_name(w.pair[1]),
            w.kind.name()
        );
    }
    let g = maximal_symmetric(&os, Budget::default())?;
    assert!(preserves(&os, &g)?.is_none());
    for p in red.pairs() {
        assert!(g.is_symmetric_on(p[0], p[1]));
    }
    print!("{}", write_behaviour(&g, os.atom_names()));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
