// Classify the network satisfaction problems of #17 and #18.

use relalg::classify::ClassVerdict;
use relalg::format::write_behaviour;
use relalg::{catalog, classify, ClassifyOptions, Result};

pub fn run_example() -> Result<()> {
    let r18 = classify(&catalog::ra18(), ClassifyOptions::default())?;
    print!("{}", r18.summary());
    assert_eq!(r18.verdict, ClassVerdict::P);
    let names = r18.algebra.atom_names();
    for w in r18.witnesses() {
        println!(
            "witness on {{{},{}}} ({}):",
            names[w.pair[0].index()],
            names[w.pair[1].index()],
            w.kind.name()
        );
        print!("{}", write_behaviour(&w.behaviour, names));
    }

    let r17 = classify(&catalog::ra17(), ClassifyOptions::default())?;
    print!("{}", r17.summary());
    assert_eq!(r17.verdict, ClassVerdict::NpComplete);
    println!("{}", serde_json::to_string(&r17.view())?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
