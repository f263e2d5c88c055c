//! Seeded generators for test networks and flexible-atom algebras.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraBuilder, RelationAlgebra};
use crate::analysis::analyze;
use crate::element::{AtomId, ElementSet};
use crate::error::{Error, Result};
use crate::network::Network;

/// Candidates tried by [`gen_algebra`] before giving up.
pub const GEN_ALGEBRA_RETRIES: usize = 10_000;

/// A network on `n_nodes` nodes where `round(density · C(n, 2))` randomly
/// chosen edges get a uniformly random nonempty label and the rest stay
/// unconstrained.
pub fn gen_network(
    alg: &RelationAlgebra,
    n_nodes: usize,
    density: f64,
    seed: u64,
) -> Result<Network> {
    if n_nodes == 0 {
        return Err(Error::usage("a network needs at least one node"));
    }
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::usage(format!("density {density} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = (0..n_nodes)
        .flat_map(|i| (i + 1..n_nodes).map(move |j| (i, j)))
        .collect();
    let count = (density * edges.len() as f64).round() as usize;
    edges.shuffle(&mut rng);
    edges.truncate(count);
    edges.sort();
    let top = alg.top();
    let mut net = Network::with_nodes(format!("random-{seed}"), alg.name(), n_nodes);
    for (i, j) in edges {
        let label = loop {
            let x = ElementSet(rng.gen::<u64>()).intersection(top);
            if !x.is_empty() {
                break x;
            }
        };
        net.constrain(i, j, label);
    }
    Ok(net)
}

/// The symmetric integral algebra on atoms `id, s, a1, …, a(n-2)` in which
/// `forbidden` lists, as index triples over the `a`-atoms, the multisets
/// `{x, y, z}` whose every permutation is a forbidden triple. Everything
/// else is allowed except what the identity forces, so `s` is flexible.
/// The result may violate associativity; callers validate.
pub fn flexible_algebra_from_forbidden(
    name: &str,
    n_atoms: usize,
    forbidden: &[[usize; 3]],
) -> Result<RelationAlgebra> {
    if n_atoms < 3 {
        return Err(Error::usage(format!(
            "need at least 3 atoms, got {n_atoms}"
        )));
    }
    let m = n_atoms - 2;
    if forbidden.iter().flatten().any(|&i| i >= m) {
        return Err(Error::usage(
            "forbidden triple mentions an atom outside a1..am",
        ));
    }
    let mut names = vec!["id".to_string(), "s".to_string()];
    names.extend((1..=m).map(|i| format!("a{i}")));
    let is_forbidden = |x: usize, y: usize, z: usize| {
        let mut t = [x, y, z];
        t.sort();
        forbidden.iter().any(|f| {
            let mut f = *f;
            f.sort();
            f == t
        })
    };
    let id = ElementSet::singleton(AtomId(0));
    let s = ElementSet::singleton(AtomId(1));
    let non_id = ElementSet::full(n_atoms).without(AtomId(0));
    let a = |i: usize| AtomId::from(i + 2);

    let mut b = AlgebraBuilder::new(name, &names);
    b.identity(&["id"])?;
    b.comp_ids(AtomId(1), AtomId(1), non_id.union(id))?;
    for i in 0..m {
        b.comp_ids(AtomId(1), a(i), non_id)?;
        b.comp_ids(a(i), AtomId(1), non_id)?;
        for j in 0..m {
            let mut out = s;
            if i == j {
                out = out.union(id);
            }
            for k in 0..m {
                if !is_forbidden(i, j, k) {
                    out = out.with(a(k));
                }
            }
            b.comp_ids(a(i), a(j), out)?;
        }
    }
    b.build()
}

/// A random valid symmetric integral algebra with flexible atom `s`,
/// obtained by rejection sampling over permutation-closed forbidden sets.
pub fn gen_algebra(n_atoms: usize, seed: u64) -> Result<RelationAlgebra> {
    if !(3..=6).contains(&n_atoms) {
        return Err(Error::usage(format!(
            "generated algebras have 3 to 6 atoms, got {n_atoms}"
        )));
    }
    let m = n_atoms - 2;
    let mut multisets = Vec::new();
    for x in 0..m {
        for y in x..m {
            for z in y..m {
                multisets.push([x, y, z]);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let name = format!("gen{n_atoms}-{seed}");
    for _ in 0..GEN_ALGEBRA_RETRIES {
        let p: f64 = rng.gen_range(0.0..0.6);
        let forbidden: Vec<[usize; 3]> = multisets
            .iter()
            .copied()
            .filter(|_| rng.gen_bool(p))
            .collect();
        let alg = flexible_algebra_from_forbidden(&name, n_atoms, &forbidden)?;
        if alg.validate().ok && analyze(&alg).flexible_atoms.contains(AtomId(1)) {
            return Ok(alg);
        }
    }
    Err(Error::LimitExceeded(format!(
        "no valid algebra after {GEN_ALGEBRA_RETRIES} candidates"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::format::write_network;

    #[test]
    fn networks_are_reproducible() {
        let alg = catalog::ra17();
        let a = write_network(&gen_network(&alg, 5, 0.6, 3).unwrap(), &alg);
        let b = write_network(&gen_network(&alg, 5, 0.6, 3).unwrap(), &alg);
        assert_eq!(a, b);
        let c = write_network(&gen_network(&alg, 5, 0.6, 4).unwrap(), &alg);
        assert_ne!(a, c);
    }

    #[test]
    fn density_zero_leaves_everything_top() {
        let alg = catalog::ra18();
        let net = gen_network(&alg, 4, 0.0, 1).unwrap();
        assert_eq!(net.labels().count(), 0);
        let full = gen_network(&alg, 4, 1.0, 1).unwrap();
        assert_eq!(full.labels().count(), 6);
        assert!(full.labels().all(|(_, l)| !l.is_empty()));
    }

    #[test]
    fn bad_parameters() {
        let alg = catalog::ra18();
        assert!(gen_network(&alg, 0, 0.5, 1).is_err());
        assert!(gen_network(&alg, 3, 1.5, 1).is_err());
        assert!(matches!(gen_algebra(2, 0), Err(Error::Usage(_))));
        assert!(matches!(gen_algebra(7, 0), Err(Error::Usage(_))));
    }

    #[test]
    fn empty_forbidden_set_on_three_atoms_is_ra18() {
        let g = flexible_algebra_from_forbidden("g", 3, &[]).unwrap();
        let r18 = catalog::ra18();
        // s plays a and a1 plays b; the atom indices already line up
        for x in 0..3 {
            for y in 0..3 {
                let gx = g.comp_atoms(AtomId(x), AtomId(y));
                let rx = r18.comp_atoms(AtomId(x), AtomId(y));
                assert_eq!(gx, rx, "{x} {y}");
            }
        }
    }

    #[test]
    fn generated_algebras_are_in_scope() {
        for seed in 0..30 {
            for n in 3..=5 {
                let alg = gen_algebra(n, seed).unwrap();
                assert!(alg.validate().ok);
                let r = analyze(&alg);
                assert!(r.integral && r.symmetric && r.flexible_atoms.contains(AtomId(1)));
            }
        }
    }
}
