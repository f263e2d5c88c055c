#![allow(dead_code)]

use relalg::format::parse_algebra;
use relalg::{add_flexible_atom, catalog, gen_network, ElementSet, Network, RelationAlgebra};

pub fn point() -> RelationAlgebra {
    parse_algebra(include_str!("../../data/point.alg")).unwrap()
}

pub fn split() -> RelationAlgebra {
    parse_algebra(include_str!("../../data/split.alg")).unwrap()
}

/// Nonempty labels with at most two atoms, in index order.
pub fn small_labels(alg: &RelationAlgebra) -> Vec<ElementSet> {
    (1..1u64 << alg.atom_count())
        .map(ElementSet)
        .filter(|s| s.len() <= 2)
        .collect()
}

/// Every triangle whose three edges carry a label of at most two atoms.
pub fn triangles(alg: &RelationAlgebra) -> Vec<Network> {
    let labels = small_labels(alg);
    let mut out = Vec::new();
    for &x in &labels {
        for &y in &labels {
            for &z in &labels {
                let mut net = Network::with_nodes("triangle", alg.name(), 3);
                net.constrain(0, 1, x);
                net.constrain(1, 2, y);
                net.constrain(0, 2, z);
                out.push(net);
            }
        }
    }
    out
}

/// Seeded random networks on 2 to 4 nodes over a rotating set of algebras.
pub fn random_networks(count: u64) -> Vec<(RelationAlgebra, Network)> {
    let algebras = [
        catalog::ra17(),
        catalog::ra18(),
        add_flexible_atom(&catalog::ra17()).unwrap(),
        point(),
    ];
    (0..count)
        .map(|seed| {
            let alg = algebras[(seed % algebras.len() as u64) as usize].clone();
            let nodes = 2 + (seed / 4 % 3) as usize;
            let density = [0.5, 0.8, 1.0][(seed / 12 % 3) as usize];
            let net = gen_network(&alg, nodes, density, seed).unwrap();
            (alg, net)
        })
        .collect()
}

/// The triangle corpus over #17 and #18 followed by `random` random networks.
pub fn corpus(random: u64) -> Vec<(RelationAlgebra, Network)> {
    let mut out = Vec::new();
    for alg in [catalog::ra17(), catalog::ra18()] {
        for net in triangles(&alg) {
            out.push((alg.clone(), net));
        }
    }
    out.extend(random_networks(random));
    out
}
