//! Acceptance criteria, one PASS/FAIL line each. Exits non-zero on any failure.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use relalg::classify::{find_witness_of_kind, ClassVerdict, WitnessKind};
use relalg::format::parse_network;
use relalg::solver::{extract_model, Verdict};
use relalg::{
    add_flexible_atom, analyze, brute_force_pair_witness, brute_force_solve, build_atom_structure,
    catalog, classify, find_injective_binary, gen_algebra, gen_network, is_closed, is_siggers,
    preserves, reduce_to_atom_csp, solve, solve_atom_csp, AtomId, AtomStructure, Behaviour, Budget,
    ClassifyOptions, RelationAlgebra,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const ID: AtomId = AtomId(0);
const A: AtomId = AtomId(1);
const B: AtomId = AtomId(2);

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<f64, String> {
    let t = start.elapsed();
    check(
        t < limit,
        format!("took {:.2} s, limit {} s", t.as_secs_f64(), limit.as_secs()),
    )?;
    Ok(t.as_secs_f64())
}

fn ac1() -> Outcome {
    let start = Instant::now();
    let r = classify(&catalog::ra18(), ClassifyOptions::default()).map_err(|e| e.to_string())?;
    check(
        r.verdict == ClassVerdict::P,
        format!("verdict {}", r.verdict.as_str()),
    )?;
    let os = build_atom_structure(&r.algebra);
    let mut verified = 0;
    for w in r.witnesses() {
        check(
            preserves(&os, &w.behaviour).unwrap().is_none(),
            "witness fails preserves",
        )?;
        check(w.verify(&os).unwrap(), "witness restriction wrong")?;
        verified += 1;
    }
    check(verified == 3, format!("{verified} witnesses"))?;
    let t = within(start, Duration::from_secs(5))?;
    Ok(format!(
        "classify(ra18) = P, 3 verified witnesses, {t:.3} s < 5 s"
    ))
}

fn ac2() -> Outcome {
    let start = Instant::now();
    let r = classify(&catalog::ra17(), ClassifyOptions::default()).map_err(|e| e.to_string())?;
    check(
        r.verdict == ClassVerdict::NpComplete,
        format!("verdict {}", r.verdict.as_str()),
    )?;
    check(
        r.bad_pair == Some([ID, A]),
        format!("bad pair {:?}", r.bad_pair),
    )?;
    let os = build_atom_structure(&r.algebra);
    for kind in WitnessKind::ALL {
        let found = brute_force_pair_witness(&os, [ID, A], kind).map_err(|e| e.to_string())?;
        check(
            found.is_none(),
            format!("exhaustive search found a {kind:?} witness"),
        )?;
    }
    let t = within(start, Duration::from_secs(60))?;
    Ok(format!(
        "classify(ra17) = NP-complete, bad pair {{id,a}}, 4 kinds absent by enumeration, {t:.3} s < 60 s"
    ))
}

/// All conservative binary tables with f(x,id) = f(id,x) = x that preserve
/// the atom structure, by enumerating the free cells.
fn injective_tables(os: &AtomStructure) -> Vec<Behaviour> {
    let n = os.atom_count();
    let free: Vec<(usize, usize)> = (1..n)
        .flat_map(|x| (1..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    let mut out = Vec::new();
    for mask in 0..1u64 << free.len() {
        let g = Behaviour::from_fn(2, n, |t| {
            let (x, y) = (t[0].index(), t[1].index());
            if x == 0 || x == y {
                t[1]
            } else if y == 0 {
                t[0]
            } else {
                let k = free.iter().position(|&p| p == (x, y)).unwrap();
                t[(mask >> k & 1) as usize]
            }
        })
        .unwrap();
        if preserves(os, &g).unwrap().is_none() {
            out.push(g);
        }
    }
    out
}

fn ac3() -> Outcome {
    let os17 = build_atom_structure(&catalog::ra17());
    let os18 = build_atom_structure(&catalog::ra18());
    let r17 = find_injective_binary(&os17, Budget::default()).map_err(|e| e.to_string())?;
    check(r17.is_absent(), "ra17 has an injective binary behaviour")?;
    check(
        injective_tables(&os17).is_empty(),
        "enumeration finds one for ra17",
    )?;
    let g = find_injective_binary(&os18, Budget::default())
        .map_err(|e| e.to_string())?
        .found()
        .ok_or("ra18 has none")?;
    check(
        preserves(&os18, &g).unwrap().is_none(),
        "ra18 witness fails preserves",
    )?;
    check(
        injective_tables(&os18).contains(&g),
        "enumeration disagrees for ra18",
    )?;
    Ok("injective binary: ra17 none, ra18 found and verified; enumeration agrees".into())
}

fn ac4() -> Outcome {
    let s = Behaviour::from_fn(6, 3, |t| {
        if t.contains(&A) {
            A
        } else if t.contains(&B) {
            B
        } else {
            ID
        }
    })
    .unwrap();
    check(is_siggers(&s).unwrap(), "not Siggers")?;
    let os = build_atom_structure(&catalog::ra18());
    check(
        preserves(&os, &s).unwrap().is_none(),
        "does not preserve O(ra18)",
    )?;
    Ok("6-ary a>b>id operation is Siggers and preserves O(ra18)".into())
}

fn corpus() -> Vec<(RelationAlgebra, relalg::Network)> {
    common::corpus(240)
}

fn ac5() -> Outcome {
    let start = Instant::now();
    let corpus = corpus();
    let mut disagreements = 0;
    for (alg, net) in &corpus {
        let sol = solve(alg, net, Budget::default()).map_err(|e| e.to_string())?;
        check(sol.verdict != Verdict::Inconclusive, "inconclusive solve")?;
        let expected = brute_force_solve(alg, net).map_err(|e| e.to_string())?;
        disagreements += ((sol.verdict == Verdict::Sat) != expected) as usize;
    }
    check(disagreements == 0, format!("{disagreements} disagreements"))?;
    let t = within(start, Duration::from_secs(120))?;
    Ok(format!(
        "solve = brute force on {} networks (432 triangles + 240 random), {t:.3} s < 120 s",
        corpus.len()
    ))
}

fn ac6() -> Outcome {
    let corpus = corpus();
    let mut disagreements = 0;
    for (alg, net) in &corpus {
        let os = build_atom_structure(alg);
        let inst = reduce_to_atom_csp(alg, net);
        let (r, _) = solve_atom_csp(&os, &inst, Budget::default()).map_err(|e| e.to_string())?;
        let direct = solve(alg, net, Budget::default()).map_err(|e| e.to_string())?;
        let mut agree = r.is_found() == (direct.verdict == Verdict::Sat);
        if let Some(a) = r.found() {
            let g = inst.refinement(alg, &a);
            agree &= is_closed(alg, &g) && g.refines(alg, net);
        }
        disagreements += !agree as usize;
    }
    check(disagreements == 0, format!("{disagreements} disagreements"))?;
    Ok(format!(
        "solve = atom-CSP reduction on {} networks",
        corpus.len()
    ))
}

fn ac7() -> Outcome {
    let alg = catalog::ra17();
    let net =
        parse_network(include_str!("../data/example.net"), &alg).map_err(|e| e.to_string())?;
    let sol = solve(&alg, &net, Budget::default()).map_err(|e| e.to_string())?;
    check(sol.verdict == Verdict::Sat, "not sat")?;
    let g = sol.refinement.as_ref().ok_or("no refinement")?;
    check(
        is_closed(&alg, g) && g.refines(&alg, &net),
        "refinement not closed",
    )?;
    let model = extract_model(&alg, g);
    check(
        model.size() == 2,
        format!("model has {} points", model.size()),
    )?;
    Ok("worked #17 instance is sat; closed refinement; 2-point model".into())
}

fn names(alg: &RelationAlgebra, t: [AtomId; 3]) -> [String; 3] {
    t.map(|a| alg.atom_name(a).to_string())
}

fn check_extension(alg: &RelationAlgebra) -> Result<(), String> {
    let ext = add_flexible_atom(alg).map_err(|e| e.to_string())?;
    check(
        ext.validate().ok,
        format!("{} does not validate", ext.name()),
    )?;
    let s = ext.atoms().last().unwrap();
    check(
        analyze(&ext).flexible_atoms.contains(s),
        "new atom not flexible",
    )?;
    let before: BTreeSet<_> = alg
        .forbidden_triples()
        .into_iter()
        .map(|t| names(alg, t))
        .collect();
    let after: BTreeSet<_> = ext
        .forbidden_triples()
        .into_iter()
        .map(|t| names(&ext, t))
        .collect();
    let delta: BTreeSet<_> = after.difference(&before).cloned().collect();
    check(
        before.is_subset(&after),
        "old forbidden triple became allowed",
    )?;
    let sname = ext.atom_name(s).to_string();
    let id = alg
        .atom_name(alg.identity_atoms().first().unwrap())
        .to_string();
    let mut expected = BTreeSet::new();
    for x in alg.atom_names() {
        let base = [sname.clone(), x.clone(), id.clone()];
        for p in [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ] {
            expected.insert(p.map(|i| base[i].clone()));
        }
    }
    check(delta == expected, format!("{}: delta differs", alg.name()))
}

fn ac8() -> Outcome {
    check_extension(&catalog::ra17())?;
    for seed in 0..20 {
        let alg = gen_algebra(3 + (seed % 3) as usize, 100 + seed).map_err(|e| e.to_string())?;
        check_extension(&alg)?;
    }
    Ok(
        "add_flexible_atom on ra17 + 20 generated: valid, flexible, delta = perms of (s,x,id)"
            .into(),
    )
}

fn ac9() -> Outcome {
    let mut hard = 0;
    let mut tractable = 0;
    for seed in 0..100 {
        let alg = gen_algebra(3 + (seed % 3) as usize, 1000 + seed).map_err(|e| e.to_string())?;
        let r = classify(&alg, ClassifyOptions::default()).map_err(|e| e.to_string())?;
        check(r.scope.in_theorem_scope, "generated algebra out of scope")?;
        let os = build_atom_structure(&r.algebra);
        for x in 1..r.algebra.atom_count() {
            let pair = [ID, AtomId::from(x)];
            if let Some(w) = r.witness(pair) {
                check(
                    w.kind.arity() == 2,
                    format!("{}: ternary witness on {{id,x}}", alg.name()),
                )?;
            }
            for kind in [WitnessKind::Majority, WitnessKind::Minority] {
                let (f, _) = find_witness_of_kind(&os, pair, kind, Budget::default())
                    .map_err(|e| e.to_string())?;
                check(
                    f.is_absent(),
                    format!("{}: {kind:?} on {{id,x}}", alg.name()),
                )?;
            }
        }
        let injective = r.injective_binary.clone().ok_or("no injective search")?;
        if injective.is_absent() {
            check(
                r.verdict == ClassVerdict::NpComplete,
                format!(
                    "{}: no injective binary but {}",
                    alg.name(),
                    r.verdict.as_str()
                ),
            )?;
        }
        match r.verdict {
            ClassVerdict::P => tractable += 1,
            ClassVerdict::NpComplete => hard += 1,
            v => return Err(format!("{}: verdict {}", alg.name(), v.as_str())),
        }
    }
    Ok(format!(
        "invariants on 100 generated algebras ({tractable} P, {hard} NP-complete)"
    ))
}

fn ac10() -> Outcome {
    let opts = ClassifyOptions::default();
    for alg in [
        catalog::ra17(),
        catalog::ra18(),
        gen_algebra(5, 42).unwrap(),
    ] {
        let a = serde_json::to_string(&classify(&alg, opts).unwrap().view()).unwrap();
        let b = serde_json::to_string(&classify(&alg, opts).unwrap().view()).unwrap();
        check(a == b, format!("classify({}) differs", alg.name()))?;
    }
    for seed in 0..20 {
        let alg = catalog::ra17();
        let n1 = gen_network(&alg, 4, 0.8, seed).unwrap();
        let n2 = gen_network(&alg, 4, 0.8, seed).unwrap();
        check(n1 == n2, "gen_network differs")?;
        let a =
            serde_json::to_string(&solve(&alg, &n1, Budget::default()).unwrap().view(&alg, &n1))
                .unwrap();
        let b =
            serde_json::to_string(&solve(&alg, &n2, Budget::default()).unwrap().view(&alg, &n2))
                .unwrap();
        check(a == b, "solve differs")?;
    }
    Ok("classify and solve JSON byte-identical across repeated runs".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("AC1", ac1),
        ("AC2", ac2),
        ("AC3", ac3),
        ("AC4", ac4),
        ("AC5", ac5),
        ("AC6", ac6),
        ("AC7", ac7),
        ("AC8", ac8),
        ("AC9", ac9),
        ("AC10", ac10),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        match f() {
            Ok(msg) => println!("{name} PASS {msg}"),
            Err(msg) => {
                failed += 1;
                println!("{name} FAIL {msg}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
